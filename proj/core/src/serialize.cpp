#include "fdl/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "fdl/errors.hpp"

namespace fdl {

using ordered_json = nlohmann::ordered_json;

std::string sig17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

const char* kToolVersion = "0.1.0";

std::string bit(bool b) { return b ? "1" : "0"; }

ordered_json poly_node(const TrigPoly& f) {
  ordered_json o;
  o["label"] = f.label;
  o["kmin"] = f.kmin;
  o["kmax"] = f.kmax;
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (const cplx& z : f.c) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  o["re"] = std::move(re);
  o["im"] = std::move(im);
  return o;
}

TrigPoly poly_from_node(const ordered_json& o) {
  if (!o.is_object() || !o.contains("kmin") || !o.contains("kmax") ||
      !o.contains("re") || !o.contains("im"))
    throw Error("polynomial document must carry label/kmin/kmax/re/im");
  TrigPoly f;
  f.label = o.value("label", std::string{});
  f.kmin = o.at("kmin").get<long long>();
  f.kmax = o.at("kmax").get<long long>();
  const auto& re = o.at("re");
  const auto& im = o.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size())
    throw Error("re/im arrays must have equal length");
  const long long width = f.kmax - f.kmin + 1;
  if (width < 0 || static_cast<std::size_t>(std::max<long long>(width, 0)) !=
                       re.size())
    throw Error("coefficient array length disagrees with [kmin, kmax]");
  f.c.resize(re.size());
  for (std::size_t i = 0; i < re.size(); ++i)
    f.c[i] = cplx{re[i].get<double>(), im[i].get<double>()};
  return f;
}

ordered_json parse(const std::string& text, const char* what) {
  ordered_json o = ordered_json::parse(text, nullptr, false);
  if (o.is_discarded())
    throw Error(std::string("malformed JSON in ") + what);
  return o;
}

double num_or_nan(const ordered_json& v) {
  return v.is_null() ? std::numeric_limits<double>::quiet_NaN()
                     : v.get<double>();
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

} // namespace

std::string trigpoly_to_json(const TrigPoly& f) {
  return poly_node(f).dump() + "\n";
}

TrigPoly trigpoly_from_json(const std::string& text) {
  return poly_from_node(parse(text, "polynomial document"));
}

std::string ct_block_to_json(const CtBlock& block) {
  ordered_json o;
  o["kind"] = "ct-block";
  o["k"] = block.spec.k;
  o["beta"] = block.spec.beta;
  o["delta"] = block.spec.delta;
  o["epsilon"] = block.spec.epsilon;
  o["n"] = block.spec.n;
  o["M"] = block.M;
  o["sup_abs_g"] = block.sup_abs_g;
  o["sup_im_g"] = block.sup_im_g;
  o["sup_gprime"] = block.sup_gprime;
  o["resolve_ratio"] = block.resolve_ratio;
  o["P"] = poly_node(block.P);
  return o.dump() + "\n";
}

CtBlock ct_block_from_json(const std::string& text) {
  ordered_json o = parse(text, "block document");
  if (o.value("kind", std::string{}) != "ct-block")
    throw Error("block document must carry kind = ct-block");
  CtBlock b;
  b.spec.k = o.at("k").get<long long>();
  b.spec.beta = o.at("beta").get<double>();
  b.spec.delta = o.at("delta").get<double>();
  b.spec.epsilon = o.at("epsilon").get<double>();
  b.spec.n = o.at("n").get<long long>();
  b.M = o.value("M", std::size_t{0});
  b.sup_abs_g = o.value("sup_abs_g", 0.0);
  b.sup_im_g = o.value("sup_im_g", 0.0);
  b.sup_gprime = o.value("sup_gprime", 0.0);
  b.resolve_ratio = o.value("resolve_ratio", 0.0);
  b.P = poly_from_node(o.at("P"));
  return b;
}

std::string sampled_to_csv(const SampledFunction& s) {
  std::string out = "t,re,im\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += sig17(s.t(i));
    out += ',';
    out += sig17(s.v[i].real());
    out += ',';
    out += sig17(s.v[i].imag());
    out += '\n';
  }
  return out;
}

std::string fejer_reports_to_csv(const std::vector<FejerBoundReport>& rows) {
  std::string out = "n,delta,form,u,lhs,rhs,holds\n";
  for (const FejerBoundReport& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += sig17(r.delta);
    out += ',';
    out += to_string(r.bound_form);
    out += ',';
    out += sig17(r.u_n);
    out += ',';
    out += sig17(r.lhs);
    out += ',';
    out += sig17(r.rhs);
    out += ',';
    out += bit(r.holds);
    out += '\n';
  }
  return out;
}

std::string jump_witnesses_to_csv(const std::vector<JumpWitnessRow>& rows) {
  std::string out = "J,j,x,n1,n2,gap,bound,holds\n";
  for (const JumpWitnessRow& r : rows) {
    out += std::to_string(r.J);
    out += ',';
    out += std::to_string(r.j);
    out += ',';
    out += sig17(r.w.x);
    out += ',';
    out += std::to_string(r.w.n1);
    out += ',';
    out += std::to_string(r.w.n2);
    out += ',';
    out += sig17(r.w.gap);
    out += ',';
    out += sig17(r.w.bound);
    out += ',';
    out += bit(r.w.holds);
    out += '\n';
  }
  return out;
}

std::string ct_bound_to_csv(const CtBoundReport& report) {
  std::string out = "arc,x,|S_nP|,threshold,holds\n";
  for (const CtBoundRow& r : report.rows) {
    out += std::to_string(r.arc);
    out += ',';
    out += sig17(r.x);
    out += ',';
    out += sig17(r.snp);
    out += ',';
    out += sig17(r.threshold);
    out += ',';
    out += bit(r.holds);
    out += '\n';
  }
  return out;
}

std::string arcs_to_csv(const IntervalFamily& F) {
  std::string out = "center,radius\n";
  for (const Arc& a : F.arcs) {
    out += sig17(a.center);
    out += ',';
    out += sig17(a.radius);
    out += '\n';
  }
  return out;
}

std::string spectrum_to_csv(const SpectrumTable& table) {
  std::string out = "beta_center,half_width,count,dim,residual\n";
  for (const SpectrumBin& b : table.bins) {
    out += sig17(b.center);
    out += ',';
    out += sig17(b.half_width);
    out += ',';
    out += std::to_string(b.count);
    out += ',';
    out += sig17(b.dim);
    out += ',';
    out += sig17(b.residual);
    out += '\n';
  }
  return out;
}

std::string spectrum_to_json(const SpectrumTable& table) {
  ordered_json o;
  o["mode"] = to_string(table.mode);
  o["p"] = table.p;
  o["M"] = table.M;
  o["N"] = table.N;
  o["n_min"] = table.n_min;
  ordered_json bins = ordered_json::array();
  ordered_json ref = ordered_json::array();
  for (const SpectrumBin& b : table.bins) {
    ordered_json row;
    row["center"] = b.center;
    row["half_width"] = b.half_width;
    row["count"] = b.count;
    row["dim"] = b.dim;
    row["residual"] = b.residual;
    bins.push_back(std::move(row));
    ordered_json rrow;
    rrow["beta"] = b.center;
    rrow["dim"] = table.mode == ProfileMode::LP ? 1.0 - b.center * table.p
                                                : 1.0;
    ref.push_back(std::move(rrow));
  }
  o["bins"] = std::move(bins);
  o["reference"] = std::move(ref);
  return o.dump() + "\n";
}

SpectrumTable spectrum_from_json(const std::string& text) {
  ordered_json o = parse(text, "spectrum document");
  SpectrumTable t;
  const std::string mode = o.value("mode", std::string("LP"));
  if (mode == "LP")
    t.mode = ProfileMode::LP;
  else if (mode == "CT")
    t.mode = ProfileMode::CT;
  else
    throw Error("spectrum mode must be LP or CT");
  t.p = o.value("p", 0.0);
  t.M = o.value("M", std::size_t{0});
  t.N = o.value("N", 0ll);
  t.n_min = o.value("n_min", 16ll);
  if (!o.contains("bins") || !o.at("bins").is_array())
    throw Error("spectrum document must carry a bins array");
  for (const auto& row : o.at("bins")) {
    SpectrumBin b;
    b.center = row.at("center").get<double>();
    b.half_width = row.at("half_width").get<double>();
    b.count = row.at("count").get<std::size_t>();
    b.dim = num_or_nan(row.at("dim"));
    b.residual = num_or_nan(row.at("residual"));
    t.bins.push_back(b);
  }
  return t;
}

std::string spectrum_to_svg(const SpectrumTable& table) {
  if (table.bins.empty())
    throw EmptySet("cannot plot a spectrum table with no bins");
  // Fixed frame; data ranges derived from the table only, so the byte
  // output is a pure function of the input.
  const double W = 640.0, H = 440.0;
  const double L = 70.0, R = 20.0, T = 30.0, B = 50.0;
  double xmax = 0.5;
  double ymin = 0.0, ymax = 1.1;
  for (const SpectrumBin& b : table.bins) {
    xmax = std::max(xmax, b.center + b.half_width);
    if (b.count > 0 && std::isfinite(b.dim)) {
      ymin = std::min(ymin, b.dim - 0.05);
      ymax = std::max(ymax, b.dim + 0.05);
    }
  }
  xmax = std::ceil(xmax * 10.0) / 10.0;
  ymin = std::floor(ymin * 4.0) / 4.0;
  ymax = std::ceil(ymax * 4.0) / 4.0;
  const auto X = [&](double x) { return L + (W - L - R) * (x / xmax); };
  const auto Y = [&](double y) {
    return H - B - (H - T - B) * ((y - ymin) / (ymax - ymin));
  };
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
       "height=\"440\" viewBox=\"0 0 640 440\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"440\" fill=\"white\"/>\n";
  // axes
  s += "<line x1=\"" + fmt2(L) + "\" y1=\"" + fmt2(H - B) + "\" x2=\"" +
       fmt2(W - R) + "\" y2=\"" + fmt2(H - B) +
       "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"" + fmt2(L) + "\" y1=\"" + fmt2(T) + "\" x2=\"" + fmt2(L) +
       "\" y2=\"" + fmt2(H - B) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  // ticks
  for (int i = 0; i <= 5; ++i) {
    const double xv = xmax * double(i) / 5.0;
    const double xp = X(xv);
    s += "<line x1=\"" + fmt2(xp) + "\" y1=\"" + fmt2(H - B) + "\" x2=\"" +
         fmt2(xp) + "\" y2=\"" + fmt2(H - B + 5) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s += "<text x=\"" + fmt2(xp) + "\" y=\"" + fmt2(H - B + 18) +
         "\" font-family=\"monospace\" font-size=\"11\" "
         "text-anchor=\"middle\">" +
         fmt2(xv) + "</text>\n";
    const double yv = ymin + (ymax - ymin) * double(i) / 5.0;
    const double yp = Y(yv);
    s += "<line x1=\"" + fmt2(L - 5) + "\" y1=\"" + fmt2(yp) + "\" x2=\"" +
         fmt2(L) + "\" y2=\"" + fmt2(yp) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s += "<text x=\"" + fmt2(L - 8) + "\" y=\"" + fmt2(yp + 4) +
         "\" font-family=\"monospace\" font-size=\"11\" "
         "text-anchor=\"end\">" +
         fmt2(yv) + "</text>\n";
  }
  s += "<text x=\"" + fmt2((L + W - R) / 2) + "\" y=\"" + fmt2(H - 12) +
       "\" font-family=\"monospace\" font-size=\"13\" "
       "text-anchor=\"middle\">beta</text>\n";
  s += "<text x=\"18\" y=\"" + fmt2((T + H - B) / 2) +
       "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" "
       "transform=\"rotate(-90 18 " +
       fmt2((T + H - B) / 2) + ")\">dim</text>\n";
  // dashed reference: the line 1 - beta*p in LP mode (down to dim 0),
  // the horizontal line at 1 in CT mode
  if (table.mode == ProfileMode::LP && table.p > 0.0) {
    const double x_end = std::min(xmax, 1.0 / table.p);
    s += "<line x1=\"" + fmt2(X(0.0)) + "\" y1=\"" + fmt2(Y(1.0)) +
         "\" x2=\"" + fmt2(X(x_end)) + "\" y2=\"" +
         fmt2(Y(1.0 - table.p * x_end)) +
         "\" stroke=\"#888888\" stroke-width=\"1\" "
         "stroke-dasharray=\"6,4\"/>\n";
  } else {
    s += "<line x1=\"" + fmt2(X(0.0)) + "\" y1=\"" + fmt2(Y(1.0)) +
         "\" x2=\"" + fmt2(X(xmax)) + "\" y2=\"" + fmt2(Y(1.0)) +
         "\" stroke=\"#888888\" stroke-width=\"1\" "
         "stroke-dasharray=\"6,4\"/>\n";
  }
  // markers for nonempty bins
  for (const SpectrumBin& b : table.bins) {
    if (b.count == 0 || !std::isfinite(b.dim)) continue;
    s += "<circle cx=\"" + fmt2(X(b.center)) + "\" cy=\"" + fmt2(Y(b.dim)) +
         "\" r=\"4\" fill=\"#1560bd\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed: " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string manifest_to_json(const std::vector<std::string>& argv,
                             std::uint64_t seed, const std::string& out_dir,
                             double wall_ms) {
  ordered_json o;
  o["args"] = argv;
  o["seed"] = seed;
  o["out_dir"] = out_dir;
  o["versions"] = {{"tool", kToolVersion}, {"compiler", __VERSION__}};
  o["timings_ms"] = {{"wall", wall_ms}};
  return o.dump(2) + "\n";
}

std::vector<std::string> manifest_args(const std::string& text) {
  ordered_json o = parse(text, "manifest");
  if (!o.contains("args") || !o.at("args").is_array())
    throw Error("manifest must carry an args array");
  std::vector<std::string> args;
  for (const auto& a : o.at("args")) args.push_back(a.get<std::string>());
  return args;
}

} // namespace fdl
