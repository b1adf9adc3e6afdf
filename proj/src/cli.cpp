// Copyright 2026 The mixradix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mixradix/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mixradix/convert.hpp"
#include "mixradix/core.hpp"
#include "mixradix/furstenberg.hpp"
#include "mixradix/grid.hpp"
#include "mixradix/poly.hpp"
#include "mixradix/yangbaxter.hpp"

namespace mixradix::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw PreconditionError(what + ": '" + s + "' is not a nonnegative integer");
  }
  return v;
}

Radix parse_radix(const std::string& s, const std::string& what) {
  const std::uint64_t v = parse_u64(s, what);
  if (v < 2 || v > 0xffffffffull) throw PreconditionError(what + " must be in 2..2^32-1, got " + s);
  return static_cast<Radix>(v);
}

template <class T, class F>
std::vector<T> parse_list(const std::string& text, const std::string& what, F&& one) {
  std::vector<T> out;
  for (const auto& part : split(text, ',')) out.push_back(one(part, what));
  if (out.empty()) throw PreconditionError(what + ": empty list");
  return out;
}

std::vector<Digit> parse_digits(const std::string& text, const std::string& what) {
  return parse_list<Digit>(text, what, [](const std::string& s, const std::string& w) {
    const std::uint64_t v = parse_u64(s, w);
    if (v > 0xffffffffull) throw PreconditionError(w + ": digit " + s + " is too large");
    return static_cast<Digit>(v);
  });
}

std::vector<Radix> parse_radices(const std::string& text, const std::string& what) {
  return parse_list<Radix>(text, what, parse_radix);
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

BigInt parse_bigint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw PreconditionError(what + ": '" + s + "' is not a nonnegative decimal integer");
  }
  return BigInt(s);
}

std::pair<std::size_t, std::size_t> parse_depth(const std::string& s) {
  const auto x = s.find_first_of("xX");
  if (x == std::string::npos) throw PreconditionError("--depth must look like MxN, got '" + s + "'");
  return {parse_u64(s.substr(0, x), "--depth"), parse_u64(s.substr(x + 1), "--depth")};
}

// Big-endian display: digits run together when every digit is a single
// character, otherwise joined by ':'.
std::string big_endian(std::span<const Digit> digits, bool compact) {
  std::string s;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (!compact && i + 1 != digits.size()) s += ':';
    s += std::to_string(digits[i]);
  }
  return s;
}

std::string join(std::span<const Radix> v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

json schema(const std::string& name) { return {{"schema", "mixradix." + name + "/1"}}; }

struct Options {
  bool as_json = false;
  std::uint64_t seed = 1;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed radix numeration toolkit. Digit lists are little-endian (a0 first); "
               "results are displayed big-endian."};
  app.name("mixradix");
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "Machine-readable JSON output");
  app.add_option("--seed", opt.seed, "Seed for stochastic subcommands");

  std::function<int()> action;

  // convert
  auto* convert = app.add_subcommand("convert", "Constant radix p to q conversion");
  Radix from = 2, to = 2;
  std::string digits_text, value_text, mode_text = "exact";
  std::size_t pad = 0;
  unsigned threads = 1;
  bool stats = false;
  convert->add_option("--from", from, "Source radix p")->required()->check(CLI::Range(2u, 0xffffffffu));
  convert->add_option("--to", to, "Target radix q")->required()->check(CLI::Range(2u, 0xffffffffu));
  auto* dig_opt = convert->add_option("--digits", digits_text, "Little-endian base-p digits a0,a1,...");
  auto* val_opt = convert->add_option("--value", value_text, "Decimal value instead of digits");
  dig_opt->excludes(val_opt);
  convert->add_option("--pad", pad, "Zero-pad the output to this length");
  convert->add_option("--mode", mode_text, "Column height: exact or carry")
      ->check(CLI::IsMember({"exact", "carry"}));
  convert->add_option("--threads", threads, "Wavefront threads (full rectangle)");
  convert->add_flag("--stats", stats, "Print conversion statistics");
  convert->callback([&] {
    action = [&] {
      if (digits_text.empty() && value_text.empty()) throw PreconditionError("convert: need --digits or --value");
      const std::vector<Digit> in = !digits_text.empty() ? parse_digits(digits_text, "--digits")
                                                         : digits_of(parse_bigint(value_text, "--value"), from);
      ConvertOptions co;
      co.mode = mode_text == "carry" ? HeightMode::carry : HeightMode::exact;
      if (convert->count("--pad")) co.pad = pad;
      co.threads = threads;
      RadixConverter conv(from, to);
      const std::vector<Digit> res = conv.convert(in, co);
      const ConversionStats& st = conv.last_stats();
      if (opt.as_json) {
        json j = schema("convert");
        j["from"] = from;
        j["to"] = to;
        j["digits"] = res;
        j["value"] = value_of(res, to).get_str();
        if (stats) {
          j["stats"] = {{"psi_applications", st.psi_applications},
                        {"divisions_in_inner_loop", st.divisions_in_inner_loop},
                        {"columns", st.columns},
                        {"fallback", st.used_fallback}};
        }
        out << j.dump() << '\n';
      } else {
        out << big_endian(res, to <= 10) << " (base " << to << ")\n";
        if (stats) {
          out << "psi_applications=" << st.psi_applications << " divisions_in_inner_loop="
              << st.divisions_in_inner_loop << " columns=" << st.columns
              << (st.used_fallback ? " fallback=1" : "") << '\n';
        }
      }
      return kExitOk;
    };
  });

  // decompose
  auto* decomp = app.add_subcommand("decompose", "Digits of n in a mixed radix basis");
  std::string n_text, basis_text;
  decomp->add_option("--n", n_text, "Decimal integer")->required();
  decomp->add_option("--basis", basis_text, "Radices b1,b2,...")->required();
  decomp->callback([&] {
    action = [&] {
      const MixedRadixBasis basis(parse_radices(basis_text, "--basis"));
      const DigitString d = decompose(parse_bigint(n_text, "--n"), basis);
      if (opt.as_json) {
        json j = schema("decompose");
        j.update(json::parse(to_json(d)));
        out << j.dump() << '\n';
        return kExitOk;
      }
      const auto r = basis.radices();
      const bool compact = std::all_of(r.begin(), r.end(), [](Radix b) { return b <= 10; });
      if (compact) {
        out << big_endian(d.digits(), true) << " (basis " << join(r, ',') << ")\n";
      } else {
        out << to_human(d) << '\n';
      }
      return kExitOk;
    };
  });

  // grid
  auto* grid = app.add_subcommand("grid", "Decoration of R(l1,l2) for an integer");
  std::string grid_n = "0", grid_path;
  Radix gp = 3, gq = 5;
  std::size_t l1 = 1, l2 = 1;
  grid->add_option("--n", grid_n, "Decimal integer below p^l1 q^l2")->required();
  grid->add_option("--p", gp, "Horizontal radix")->required()->check(CLI::Range(2u, 0xffffffffu));
  grid->add_option("--q", gq, "Vertical radix")->required()->check(CLI::Range(2u, 0xffffffffu));
  grid->add_option("--l1", l1, "Width")->required();
  grid->add_option("--l2", l2, "Height")->required();
  grid->add_option("--path", grid_path, "Also read digits along a word over {P,Q}");
  grid->callback([&] {
    action = [&] {
      const RectDecoration dec = decoration_of_integer(parse_bigint(grid_n, "--n"), gp, gq, l1, l2);
      std::optional<DigitString> along;
      if (!grid_path.empty()) along = read_along_path(dec, BasisWord::parse(grid_path, gp, gq));
      if (opt.as_json) {
        json j = schema("grid");
        j.update(json::parse(render_grid(dec, RenderStyle::json)));
        if (along) j["path"] = {{"word", grid_path}, {"digits", json::parse(to_json(*along))}};
        out << j.dump() << '\n';
      } else {
        out << render_grid(dec, RenderStyle::ascii);
        if (along) out << grid_path << ": " << to_human(*along) << '\n';
      }
      return kExitOk;
    };
  });

  // yb
  auto* yb = app.add_subcommand("yb", "Yang-Baxter checks");
  yb->require_subcommand(1);
  std::string yb_radices, yb_nodes, yb_n = "0", yb_mult;
  std::size_t yb_samples = 100;
  auto* yb_psi = yb->add_subcommand("psi", "Exhaustive check for psi on three radices");
  yb_psi->add_option("--radices", yb_radices, "p1,p2,p3")->required();
  yb_psi->callback([&] {
    action = [&] {
      const auto r = parse_radices(yb_radices, "--radices");
      if (r.size() != 3) throw PreconditionError("--radices needs exactly three values");
      const YbReport rep = yb_check_psi(r[0], r[1], r[2]);
      if (opt.as_json) {
        json j = schema("yb.psi");
        j["radices"] = r;
        j["holds"] = rep.holds;
        j["bijective"] = rep.bijective;
        j["checked"] = rep.checked;
        if (rep.counterexample) j["counterexample"] = *rep.counterexample;
        out << j.dump() << '\n';
      } else {
        out << "psi(" << join(r, ',') << "): " << (rep.holds && rep.bijective ? "holds" : "FAILS") << " on "
            << rep.checked << " triples\n";
        if (rep.counterexample) {
          const auto& c = *rep.counterexample;
          out << "counterexample: (" << c[0] << "," << c[1] << "," << c[2] << ")\n";
        }
      }
      return rep.holds && rep.bijective ? kExitOk : kExitInvariant;
    };
  });
  auto* yb_phi = yb->add_subcommand("phi", "Check for phi on three rational nodes");
  yb_phi->add_option("--nodes", yb_nodes, "a1,a2,a3 (integers or num/den)")->required();
  yb_phi->add_option("--samples", yb_samples, "Random sample points");
  yb_phi->callback([&] {
    action = [&] {
      const auto a = parse_rationals(yb_nodes);
      if (a.size() != 3) throw PreconditionError("--nodes needs exactly three values");
      const PhiYbReport rep = yb_check_phi(a[0], a[1], a[2], yb_samples, opt.seed);
      auto matrix = [](const Matrix3& m) {
        json rows = json::array();
        for (const auto& row : m) {
          json r = json::array();
          for (const auto& e : row) r.push_back(e.get_str());
          rows.push_back(r);
        }
        return rows;
      };
      if (opt.as_json) {
        json j = schema("yb.phi");
        j["holds"] = rep.holds;
        j["matrices_equal"] = rep.matrices_equal;
        j["pointwise"] = rep.pointwise;
        j["samples"] = rep.samples;
        j["matrix"] = matrix(rep.lhs);
        out << j.dump() << '\n';
      } else {
        out << "phi: " << (rep.holds ? "holds" : "FAILS") << " (" << rep.samples << " samples)\n";
        for (const auto& row : rep.lhs) {
          out << "  " << row[0].get_str() << ' ' << row[1].get_str() << ' ' << row[2].get_str() << '\n';
        }
      }
      return rep.holds ? kExitOk : kExitInvariant;
    };
  });
  auto* yb_cube = yb->add_subcommand("cube", "Transposition routes agree with direct decompositions");
  yb_cube->add_option("--n", yb_n, "Decimal integer")->required();
  yb_cube->add_option("--radices", yb_radices, "p1,...,pN")->required();
  yb_cube->add_option("--mult", yb_mult, "Multiplicities l1,...,lN (default all 1)");
  yb_cube->callback([&] {
    action = [&] {
      const auto r = parse_radices(yb_radices, "--radices");
      std::vector<std::size_t> l(r.size(), 1);
      if (!yb_mult.empty()) {
        const auto parsed = parse_list<std::uint64_t>(yb_mult, "--mult", parse_u64);
        if (parsed.size() != r.size()) throw PreconditionError("--mult needs one value per radix");
        l.assign(parsed.begin(), parsed.end());
      }
      const BigInt n = parse_bigint(yb_n, "--n");
      HypercubeOptions ho;
      ho.seed = opt.seed;
      const HypercubeReport rep = hypercube_consistency(n, r, l, ho);
      bool braid_ok = true;
      std::optional<BraidReport> braid;
      if (r.size() == 3 && std::all_of(l.begin(), l.end(), [](std::size_t x) { return x == 1; })) {
        braid = braid_transform_consistency(n, r[0], r[1], r[2]);
        braid_ok = braid->holds;
      }
      const bool ok = rep.holds && braid_ok;
      if (opt.as_json) {
        json j = schema("yb.cube");
        j["holds"] = ok;
        j["words_checked"] = rep.words_checked;
        j["sampled"] = rep.sampled;
        if (braid) j["reversed"] = json::parse(to_json(braid->expected));
        out << j.dump() << '\n';
      } else {
        out << "cube: " << (ok ? "holds" : "FAILS") << " on " << rep.words_checked << " words"
            << (rep.sampled ? " (sampled)" : "") << '\n';
        if (braid) {
          out << "start    " << to_human(braid->start) << '\n'
              << "reversed " << to_human(braid->expected) << '\n';
        }
      }
      return ok ? kExitOk : kExitInvariant;
    };
  });

  // poly
  auto* poly = app.add_subcommand("poly", "Exact polynomial tools");
  poly->require_subcommand(1);
  std::string coeffs_text, nodes_text, y_text = "0", x_text = "0";
  std::size_t k_count = 1;
  bool scaled = false;
  auto* peval = poly->add_subcommand("eval", "Horner evaluation at y");
  peval->add_option("--coeffs", coeffs_text, "c0,c1,... in powers of (X - x)")->required();
  peval->add_option("--x", x_text, "Expansion point of the coefficients");
  peval->add_option("--y", y_text, "Evaluation point")->required();
  peval->callback([&] {
    action = [&] {
      const auto c = parse_rationals(coeffs_text);
      OpCounter ops;
      const Rational v = horner_eval(c, parse_rational(x_text), parse_rational(y_text), &ops);
      if (opt.as_json) {
        json j = schema("poly.eval");
        j["value"] = v.get_str();
        j["multiplications"] = ops.multiplications;
        out << j.dump() << '\n';
      } else {
        out << v.get_str() << '\n';
      }
      return kExitOk;
    };
  });
  auto* pder = poly->add_subcommand("derivs", "P(y), P'(y)/1!, ... (Taylor coefficients)");
  pder->add_option("--coeffs", coeffs_text, "Monomial coefficients p0,p1,...")->required();
  pder->add_option("--y", y_text, "Point")->required();
  pder->add_option("--k", k_count, "Number of values")->required();
  pder->add_flag("--scaled", scaled, "Multiply entry i by i! (plain derivatives)");
  pder->callback([&] {
    action = [&] {
      const ExactPoly p(parse_rationals(coeffs_text));
      const Rational y = parse_rational(y_text);
      const auto v = scaled ? derivatives(p, y, k_count) : taylor_coeffs(p, y, k_count);
      if (opt.as_json) {
        json j = schema("poly.derivs");
        j["scaled"] = scaled;
        j["values"] = json::array();
        for (const auto& e : v) j["values"].push_back(e.get_str());
        out << j.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].get_str();
        out << '\n';
      }
      return kExitOk;
    };
  });
  auto* pnew = poly->add_subcommand("newton", "Coefficients in the Newton basis of the nodes");
  pnew->add_option("--coeffs", coeffs_text, "Monomial coefficients p0,p1,...")->required();
  pnew->add_option("--nodes", nodes_text, "a1,a2,...")->required();
  pnew->callback([&] {
    action = [&] {
      const ExactPoly p(parse_rationals(coeffs_text));
      const NewtonCoeffs c = to_newton(p, PolyBasis{parse_rationals(nodes_text)});
      if (opt.as_json) {
        json j = schema("poly.newton");
        j["nodes"] = json::array();
        j["coeffs"] = json::array();
        for (const auto& a : c.basis.nodes) j["nodes"].push_back(a.get_str());
        for (const auto& e : c.coeffs) j["coeffs"].push_back(e.get_str());
        out << j.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < c.coeffs.size(); ++i) out << (i ? " " : "") << c.coeffs[i].get_str();
        out << '\n';
      }
      return kExitOk;
    };
  });

  // furstenberg
  auto* fur = app.add_subcommand("furstenberg", "Corner decorations of rationals");
  fur->require_subcommand(1);
  std::string fk = "0", fr = "1", fx = "0", depth_text = "4x4";
  Radix fp = 3, fq = 5;
  bool render = false, rudolph = false;
  std::uint64_t trials = 10000;
  auto* forb = fur->add_subcommand("orbit", "Orbit of k/r under x -> p x mod 1");
  forb->add_option("--k", fk, "Numerator")->required();
  forb->add_option("--r", fr, "Denominator")->required();
  forb->add_option("--p", fp, "Multiplier")->required()->check(CLI::Range(2u, 0xffffffffu));
  auto* forb_q = forb->add_option("--q", fq, "Second multiplier")->check(CLI::Range(2u, 0xffffffffu));
  forb->callback([&] {
    action = [&] {
      const BigInt k = parse_bigint(fk, "--k"), r = parse_bigint(fr, "--r");
      std::vector<OrbitTable> tables{orbit(k, r, fp)};
      if (forb_q->count()) tables.push_back(orbit(k, r, fq));
      if (opt.as_json) {
        json j = schema("furstenberg.orbit");
        j["r"] = r.get_str();
        j["orbits"] = json::array();
        for (const auto& t : tables) {
          json nums = json::array();
          for (const auto& v : t.numerators) nums.push_back(v.get_str());
          j["orbits"].push_back({{"p", t.p}, {"numerators", nums}});
        }
        out << j.dump() << '\n';
      } else {
        for (const auto& t : tables) {
          for (std::size_t i = 0; i < t.numerators.size(); ++i) out << (i ? " " : "") << t.numerators[i].get_str();
          out << '\n';
        }
      }
      return kExitOk;
    };
  });
  auto* fquad = fur->add_subcommand("quadrant", "Window of the corner decoration of x");
  fquad->add_option("--x", fx, "NUM/DEN in [0,1)")->required();
  fquad->add_option("--p", fp, "Horizontal radix")->required()->check(CLI::Range(2u, 0xffffffffu));
  fquad->add_option("--q", fq, "Vertical radix")->required()->check(CLI::Range(2u, 0xffffffffu));
  fquad->add_option("--depth", depth_text, "MxN window extents");
  fquad->add_flag("--render", render, "ASCII drawing");
  fquad->add_flag("--rudolph", rudolph, "Also print the face integers S + pE");
  fquad->callback([&] {
    action = [&] {
      const auto [m, n] = parse_depth(depth_text);
      const QuadrantWindow w = quadrant(UnitRational::parse(fx), fp, fq, m, n);
      if (opt.as_json) {
        json j = schema("furstenberg.quadrant");
        j.update(json::parse(quadrant_to_json(w)));
        if (rudolph) {
          const auto u = rudolph_array(w);
          json rows = json::array();
          for (std::size_t i = 0; i < u.extent_i(); ++i) {
            json col = json::array();
            for (std::size_t jj = 0; jj < u.extent_j(); ++jj) col.push_back(u(i, jj));
            rows.push_back(col);
          }
          j["rudolph"] = rows;
        }
        out << j.dump() << '\n';
        return kExitOk;
      }
      if (render || !rudolph) out << render_quadrant(w);
      if (rudolph) {
        const auto u = rudolph_array(w);
        for (std::size_t jj = 0; jj < u.extent_j(); ++jj) {
          for (std::size_t i = u.extent_i(); i-- > 0;) out << u(i, jj) << (i ? " " : "");
          out << '\n';
        }
      }
      return kExitOk;
    };
  });
  auto* flay = fur->add_subcommand("layers", "Two-layer decoration of k/r over bases p, q, r");
  flay->add_option("--k", fk, "Numerator")->required();
  flay->add_option("--r", fr, "Denominator")->required();
  flay->add_option("--p", fp, "Horizontal radix")->required()->check(CLI::Range(2u, 0xffffffffu));
  flay->add_option("--q", fq, "Vertical radix")->required()->check(CLI::Range(2u, 0xffffffffu));
  flay->add_option("--depth", depth_text, "MxN window extents");
  flay->callback([&] {
    action = [&] {
      const auto [m, n] = parse_depth(depth_text);
      const LayerStack s = layer_fill(parse_u64(fk, "--k"), parse_u64(fr, "--r"), fp, fq, m, n);
      if (opt.as_json) {
        json j = schema("furstenberg.layers");
        j.update(json::parse(layers_to_json(s)));
        out << j.dump() << '\n';
        return kExitOk;
      }
      out << "layer 1\n" << render_quadrant(s.layer1) << "transversal\n";
      for (std::size_t jj = 0; jj <= s.n; ++jj) {
        for (std::size_t i = s.m + 1; i-- > 0;) out << s.transversal(i, jj) << (i ? " " : "");
        out << '\n';
      }
      out << "cubes checked by both routes: " << s.cubes_checked << '\n';
      return kExitOk;
    };
  });
  auto* funi = fur->add_subcommand("uniformity", "Exact and sampled uniformity transport");
  funi->add_option("--p", fp, "Horizontal radix")->required()->check(CLI::Range(2u, 0xffffffffu));
  funi->add_option("--q", fq, "Vertical radix")->required()->check(CLI::Range(2u, 0xffffffffu));
  funi->add_option("--trials", trials, "Random windows")->check(CLI::PositiveNumber);
  funi->callback([&] {
    action = [&] {
      const UniformityReport rep = uniformity_check(fp, fq, trials, opt.seed);
      if (opt.as_json) {
        json j = schema("furstenberg.uniformity");
        j["single_cell_exact"] = rep.single_cell_exact;
        j["trials"] = rep.trials;
        j["north_counts"] = rep.north_counts;
        j["west_counts"] = rep.west_counts;
        j["chi2_north"] = rep.chi2_north;
        j["chi2_west"] = rep.chi2_west;
        j["within_3_sigma"] = rep.within_3_sigma;
        out << j.dump() << '\n';
      } else {
        out << "single cell exact: " << (rep.single_cell_exact ? "yes" : "no") << '\n'
            << "trials " << rep.trials << " chi2 north " << rep.chi2_north << " (" << fp - 1 << " dof) west "
            << rep.chi2_west << " (" << fq - 1 << " dof) within 3 sigma: " << (rep.within_3_sigma ? "yes" : "no")
            << '\n';
      }
      return rep.single_cell_exact ? kExitOk : kExitInvariant;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace mixradix::cli
