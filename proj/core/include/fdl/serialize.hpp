#ifndef FDL_SERIALIZE_HPP
#define FDL_SERIALIZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fdl/ct_saturator.hpp"
#include "fdl/dyadic.hpp"
#include "fdl/fejer.hpp"
#include "fdl/lp_saturator.hpp"
#include "fdl/trigpoly.hpp"
#include "fdl/divergence.hpp"

namespace fdl {

/// Decimal text for v with 17 significant digits ('.' separator); the
/// shortest form %.17g produces, so doubles round-trip exactly.
std::string sig17(double v);

/// JSON text {label, kmin, kmax, re: [...], im: [...]} for the window
/// [kmin, kmax]. Coefficients serialize as exact round-trip decimals.
std::string trigpoly_to_json(const TrigPoly& f);
TrigPoly trigpoly_from_json(const std::string& text);

/// A single uniform-norm block bundled with its construction parameters so
/// the bound sweep can be replayed from the file alone.
std::string ct_block_to_json(const CtBlock& block);
CtBlock ct_block_from_json(const std::string& text);

/// CSV with header t,re,im; one row per sample.
std::string sampled_to_csv(const SampledFunction& s);

/// CSV with header n,delta,form,u,lhs,rhs,holds; one row per report. The
/// form column holds the tag literal (EQ1 or EQ2), u the localization
/// weight u(n, delta), holds 1 or 0.
std::string fejer_reports_to_csv(const std::vector<FejerBoundReport>& rows);

/// One jump witness labelled with the block indices it was taken from.
struct JumpWitnessRow {
  int J = 0;
  int j = 0;
  JumpWitness w;
};

/// CSV with header J,j,x,n1,n2,gap,bound,holds.
std::string jump_witnesses_to_csv(const std::vector<JumpWitnessRow>& rows);

/// CSV with header arc,x,|S_nP|,threshold,holds.
std::string ct_bound_to_csv(const CtBoundReport& report);

/// CSV with header center,radius; one row per arc.
std::string arcs_to_csv(const IntervalFamily& F);

/// CSV with header beta_center,half_width,count,dim,residual. Empty bins
/// print nan estimates.
std::string spectrum_to_csv(const SpectrumTable& table);

/// JSON document with mode, p, M, N, n_min, the bins, and the reference
/// curve (1 - beta*p per center in LP mode, constant 1 in CT mode).
std::string spectrum_to_json(const SpectrumTable& table);
SpectrumTable spectrum_from_json(const std::string& text);

/// Standalone SVG scatter of dim against beta with the dashed reference
/// (the segment 1 - beta*p in LP mode, the horizontal line 1 in CT mode).
/// Byte output is a pure function of the table. Throws EmptySet when the
/// table has no bins.
std::string spectrum_to_svg(const SpectrumTable& table);

/// Whole-file text IO; failures throw Error with the path in the message.
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

/// Run manifest: the exact argument vector plus tool/compiler versions and
/// coarse timings, written alongside every run's outputs so the run can be
/// replayed from the file alone.
std::string manifest_to_json(const std::vector<std::string>& argv,
                             std::uint64_t seed, const std::string& out_dir,
                             double wall_ms);
std::vector<std::string> manifest_args(const std::string& text);

} // namespace fdl

#endif
