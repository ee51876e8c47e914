#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "macsym/cachefile.hpp"
#include "macsym/charmap.hpp"
#include "macsym/jsonio.hpp"
#include "macsym/macdonald.hpp"
#include "macsym/positivity.hpp"
#include "macsym/spherical.hpp"

namespace macsym::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "json";
  std::string cache_path;
  bool no_cache = false;
  int jobs = 1;
  std::string out_path;
};

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json parse_json_flag(const std::string& text, const std::string& flag) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw CLI::ValidationError(flag, "malformed JSON: " + text);
  return j;
}

Partition parse_partition_flag(const std::string& text,
                               const std::string& flag) {
  try {
    return parse_json_flag(text, flag).get<Partition>();
  } catch (const CLI::Error&) {
    throw;
  } catch (const std::exception& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

PartitionFn parse_fn_flag(const std::string& text, const std::string& flag,
                          FamilyKind kind) {
  try {
    return partition_fn_from_json(parse_json_flag(text, flag), kind);
  } catch (const CLI::Error&) {
    throw;
  } catch (const std::exception& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

// --- LaTeX rendering -------------------------------------------------------

std::string latex_poly(const PolyQT& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Int& c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Int ab = boost::multiprecision::abs(c);
    const bool has_var = it->first.eq > 0 || it->first.et > 0;
    if (ab != 1 || !has_var) os << ab.str();
    if (it->first.eq > 0) {
      os << "q";
      if (it->first.eq > 1) os << "^{" << it->first.eq << "}";
    }
    if (it->first.et > 0) {
      os << "t";
      if (it->first.et > 1) os << "^{" << it->first.et << "}";
    }
  }
  return os.str();
}

std::string latex_ratqt(const RatQT& r) {
  if (r.is_polynomial()) return latex_poly(r.num());
  return "\\frac{" + latex_poly(r.num()) + "}{" + latex_poly(r.den()) + "}";
}

std::string latex_partition(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.parts()[i];
  os << ")";
  return os.str();
}

std::string latex_binding_args(Binding b) {
  switch (b) {
    case Binding::qt: return ";q,t";
    case Binding::tq: return ";t,q";
    case Binding::qq2: return ";q,q^2";
    case Binding::q2q: return ";q^2,q";
    case Binding::hl: return ";t";
    default: return "";
  }
}

std::string latex_symfunc(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "\\left(" << latex_ratqt(c) << "\\right)";
    for (const auto& fac : t) {
      os << " " << basis_name(fac.basis.kind) << "_{"
         << latex_partition(fac.part) << "}(" << fac.family.id
         << latex_binding_args(fac.basis.binding) << ")";
    }
  }
  return os.str();
}

// --- record emission -------------------------------------------------------

struct Emitter {
  const Options& opt;
  std::ostream& out;

  void record(const json& j, const std::string& latex_alt = "") {
    if (opt.format == "latex" && !latex_alt.empty()) {
      out << latex_alt << "\n";
      return;
    }
    if (opt.format == "csv") {
      // One row per record: flatten scalar fields in key order.
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out << ",";
        first = false;
        if (v.is_string())
          out << v.get<std::string>();
        else
          out << v.dump();
      }
      out << "\n";
      return;
    }
    out << j.dump() << "\n";
  }
};

json symfunc_terms_json(const SymFunc& f, BasisLabel basis) {
  const SymFunc converted = f.to_basis(basis);
  json terms = json::array();
  for (const auto& [t, c] : converted.terms()) {
    json factors = json::array();
    for (const auto& fac : t)
      factors.push_back(json{{"family", fac.family.id},
                             {"partition", fac.part}});
    terms.push_back(json{{"coeff", c}, {"factors", std::move(factors)}});
  }
  return terms;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out_stream,
             std::ostream& err) {
  Options opt;
  CLI::App app{"exact Macdonald/Hall-Littlewood symmetric functions and "
               "spherical functions for GL(2n,q)/Sp(2n,q)"};
  app.set_help_all_flag("--help-all");
  app.fallthrough();
  app.add_option("--format", opt.format, "json|csv|latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));
  app.add_option("--cache", opt.cache_path, "cache file path");
  app.add_flag("--no-cache", opt.no_cache, "disable the disk cache");
  app.add_option("--jobs", opt.jobs, "scan parallelism")->check(CLI::PositiveNumber);
  app.add_option("--out", opt.out_path, "write records to a file");

  std::ofstream out_file;
  auto sink = [&]() -> std::ostream& {
    if (!opt.out_path.empty()) {
      if (!out_file.is_open()) out_file.open(opt.out_path);
      return out_file;
    }
    return out_stream;
  };

  // Option values are final before any subcommand callback fires, so the
  // first computation attaches the cache.
  bool cache_attached = false;
  auto ensure_cache = [&] {
    if (cache_attached || opt.no_cache) return;
    Tables::instance().attach_cache(
        opt.cache_path.empty() ? CacheFile::default_path() : opt.cache_path);
    cache_attached = true;
  };

  int exit_code = 0;

  // ---- macdonald ----
  auto* mac = app.add_subcommand("macdonald", "Macdonald polynomial expansions");
  struct {
    std::string which = "P", lambda, mu, basis = "m", binding = "qt";
  } mac_opt;
  mac->add_option("which", mac_opt.which, "P|Q|J")
      ->check(CLI::IsMember({"P", "Q", "J"}));
  mac->add_option("--lambda", mac_opt.lambda, "partition, JSON array")->required();
  mac->add_option("--mu", mac_opt.mu, "skew by this partition (P only)");
  mac->add_option("--basis", mac_opt.basis, "m|e|h|p|s|P|Q|J");
  mac->add_option("--binding", mac_opt.binding, "qt|q,q2|q2,q|hl");
  mac->callback([&] {
    ensure_cache();
    const Partition la = parse_partition_flag(mac_opt.lambda, "--lambda");
    const Binding b = parse_binding(mac_opt.binding);
    SymFunc f;
    if (!mac_opt.mu.empty()) {
      f = skew_P(la, parse_partition_flag(mac_opt.mu, "--mu"), b);
    } else if (mac_opt.which == "P") {
      f = macdonald_P(la, b);
    } else if (mac_opt.which == "Q") {
      f = macdonald_Q(la, b);
    } else {
      f = macdonald_J(la, b);
    }
    BasisLabel target{parse_basis(mac_opt.basis), Binding::none};
    if (target.kind == BasisKind::P || target.kind == BasisKind::Q ||
        target.kind == BasisKind::J)
      target.binding = b;
    json rec{{"op", "macdonald"},
             {"which", mac_opt.which},
             {"lambda", la},
             {"binding", binding_name(b)},
             {"basis", mac_opt.basis},
             {"terms", symfunc_terms_json(f, target)}};
    if (!mac_opt.mu.empty())
      rec["mu"] = parse_partition_flag(mac_opt.mu, "--mu");
    Emitter{opt, sink()}.record(rec, latex_symfunc(f.to_basis(target)));
  });

  // ---- green ----
  auto* green_cmd = app.add_subcommand("green", "Green polynomial tables");
  int green_n = 1;
  green_cmd->add_option("--n", green_n, "degree")->required()->check(CLI::PositiveNumber);
  green_cmd->callback([&] {
    ensure_cache();
    auto tab = green_polynomials(green_n);
    Emitter em{opt, sink()};
    for (std::size_t i = 0; i < tab->order.size(); ++i)
      for (std::size_t j = 0; j < tab->order.size(); ++j) {
        const RatQT& v = tab->Q.at(static_cast<int>(i), static_cast<int>(j));
        em.record(json{{"op", "green"},
                       {"rho", tab->order[i]},
                       {"mu", tab->order[j]},
                       {"value", v}},
                  "Q^{" + latex_partition(tab->order[j]) + "}_{" +
                      latex_partition(tab->order[i]) + "}(t) = " +
                      latex_ratqt(v));
      }
  });

  // ---- charmap ----
  auto* cm = app.add_subcommand("charmap", "class/character combinatorics");
  struct {
    std::string mu, lambda, q;
    int n = 0;
  } cm_opt;
  auto add_cm = [&](const std::string& name, const std::string& desc) {
    auto* sub = cm->add_subcommand(name, desc);
    sub->add_option("--mu", cm_opt.mu, "class index, JSON object");
    sub->add_option("--lambda", cm_opt.lambda, "character index, JSON object");
    sub->add_option("--q", cm_opt.q, "evaluate at this rational q");
    sub->add_option("--n", cm_opt.n, "weight");
    return sub;
  };
  auto emit_value = [&](const char* op, const json& index, const RatQT& v) {
    json rec{{"op", op}, {"index", index}, {"value", v}};
    if (!cm_opt.q.empty()) {
      const Rational q0 = parse_rational(cm_opt.q);
      rec["q"] = rational_str(q0);
      rec["value_at_q"] = rational_str(v.eval_q(q0));
    }
    Emitter{opt, sink()}.record(rec, latex_ratqt(v));
  };
  add_cm("class-size", "|C_mu| in GL_n(q)")->callback([&] {
    const ClassData mu(parse_fn_flag(cm_opt.mu, "--mu", FamilyKind::M));
    emit_value("class-size", partition_fn_to_json(mu.mu), class_size(mu));
  });
  add_cm("dim", "dimension of the irreducible character")->callback([&] {
    const CharData la(parse_fn_flag(cm_opt.lambda, "--lambda", FamilyKind::L));
    emit_value("dim", partition_fn_to_json(la.lambda), dim_irreducible(la));
  });
  add_cm("coset-size", "|H g_mu H| in GL_2n(q)")->callback([&] {
    const ClassData mu(parse_fn_flag(cm_opt.mu, "--mu", FamilyKind::M));
    emit_value("coset-size", partition_fn_to_json(mu.mu),
               double_coset_size(mu));
  });
  add_cm("counts", "numbers of classes/cosets/characters at numeric q")
      ->callback([&] {
        if (cm_opt.q.empty())
          throw CLI::ValidationError("--q", "counts needs a numeric q");
        const long long q0 = std::stoll(cm_opt.q);
        const Int classes = count_partition_fns(cm_opt.n, q0);
        json rec{{"op", "counts"},
                 {"n", cm_opt.n},
                 {"q", q0},
                 {"classes", int_to_json(classes)},
                 {"double_cosets", int_to_json(classes)},
                 {"characters", int_to_json(classes)}};
        Emitter{opt, sink()}.record(rec);
      });

  // ---- spherical ----
  auto* sph = app.add_subcommand("spherical", "spherical function values");
  auto* sphv = sph->add_subcommand("value", "evaluate phi_lambda on a coset");
  struct {
    std::string lambda, coset = "identity", route = "a", q;
  } sph_opt;
  sphv->add_option("--lambda", sph_opt.lambda, "character index, JSON object")
      ->required();
  sphv->add_option("--coset", sph_opt.coset,
                   "identity|transvection|unipotent:<json partition>");
  sphv->add_option("--route", sph_opt.route, "a|b|c|all");
  sphv->add_option("--q", sph_opt.q, "evaluate at this rational q");
  sphv->callback([&] {
    ensure_cache();
    const CharData la(parse_fn_flag(sph_opt.lambda, "--lambda", FamilyKind::L));
    UnipotentCoset coset = UnipotentCoset::identity(std::max(la.n, 1));
    if (sph_opt.coset == "identity") {
    } else if (sph_opt.coset == "transvection") {
      coset = UnipotentCoset::transvection(la.n);
    } else if (sph_opt.coset.rfind("unipotent:", 0) == 0) {
      coset = UnipotentCoset::of(
          parse_partition_flag(sph_opt.coset.substr(10), "--coset"));
    } else {
      throw CLI::ValidationError("--coset", "unknown coset: " + sph_opt.coset);
    }
    json rec{{"op", "spherical"},
             {"lambda", partition_fn_to_json(la.lambda)},
             {"coset", coset.mu}};
    RatQT value;
    if (sph_opt.route == "all") {
      // force recomputation by every applicable route and diff
      const RatQT a = value_route_A(la, coset);
      const RatQT b = value_route_B(la, coset);
      rec["routes"] = json{{"a", a}, {"b", b}};
      bool agree = a == b;
      if (coset == UnipotentCoset::transvection(coset.n)) {
        const RatQT c = value_route_C_transvection(la);
        rec["routes"]["c"] = c;
        agree = agree && a == c;
      }
      rec["agree"] = agree;
      if (!agree) exit_code = 1;
      value = a;
    } else if (sph_opt.route == "a") {
      value = spherical_value(la, coset, Route::A);
    } else if (sph_opt.route == "b") {
      value = spherical_value(la, coset, Route::B);
    } else if (sph_opt.route == "c") {
      value = spherical_value(la, coset, Route::C);
    } else {
      throw CLI::ValidationError("--route", "unknown route: " + sph_opt.route);
    }
    rec["value"] = value;
    if (!sph_opt.q.empty()) {
      const Rational q0 = parse_rational(sph_opt.q);
      rec["q"] = rational_str(q0);
      rec["value_at_q"] = rational_str(value.eval_q(q0));
    }
    Emitter{opt, sink()}.record(rec, latex_ratqt(value));
  });

  // ---- scans ----
  struct {
    int max_n = 4;
    int max_mu = 3;
    std::string qs = "3,5,7,9";
    bool skew = false;
  } scan_opt;
  auto parse_qs = [&]() {
    std::vector<Rational> qs;
    std::stringstream ss(scan_opt.qs);
    std::string item;
    while (std::getline(ss, item, ',')) qs.push_back(parse_rational(item));
    return qs;
  };

  auto* pos = app.add_subcommand("positivity", "Schur-positivity scans");
  auto* pos_scan = pos->add_subcommand("scan", "scan C_{la/mu}^nu(q,q^2)");
  pos_scan->add_option("--max-n", scan_opt.max_n, "max |lambda|");
  pos_scan->add_option("--max-mu", scan_opt.max_mu, "max |mu|");
  pos_scan->add_option("--qs", scan_opt.qs, "comma-separated rationals");
  pos_scan->callback([&] {
    ensure_cache();
    auto reports = positivity_scan(scan_opt.max_n, parse_qs(), scan_opt.max_mu,
                                   opt.jobs);
    Emitter em{opt, sink()};
    for (const auto& r : reports) {
      json evals = json::array();
      for (const auto& [q0, v] : r.evaluations)
        evals.push_back(json{{"q", rational_str(q0)}, {"value", rational_str(v)}});
      em.record(json{{"op", "positivity"},
                     {"lambda", r.lambda},
                     {"mu", r.mu},
                     {"nu", r.nu},
                     {"coefficient", r.coefficient},
                     {"evaluations", evals},
                     {"vanishing_predicted", r.vanishing_predicted},
                     {"falsified", r.falsified},
                     {"falsification", r.falsification}});
      if (r.falsified) exit_code = 1;
    }
  });

  auto* van = app.add_subcommand("vanishing", "LR vanishing criterion scans");
  auto* van_scan = van->add_subcommand("scan", "predicate vs identical vanishing");
  van_scan->add_option("--max-n", scan_opt.max_n, "max |lambda|");
  van_scan->add_option("--max-mu", scan_opt.max_mu, "max |mu|");
  van_scan->callback([&] {
    ensure_cache();
    auto reports = positivity_scan(scan_opt.max_n, {}, scan_opt.max_mu, opt.jobs);
    Emitter em{opt, sink()};
    for (const auto& r : reports) {
      em.record(json{{"op", "vanishing"},
                     {"lambda", r.lambda},
                     {"mu", r.mu},
                     {"nu", r.nu},
                     {"predicted", r.vanishing_predicted},
                     {"coefficient_zero", r.coefficient.is_zero()},
                     {"falsified", r.falsified}});
      if (r.falsified) exit_code = 1;
    }
  });

  auto* hag = app.add_subcommand("haglund", "N[q] certificate reports");
  auto* hag_scan = hag->add_subcommand("scan", "report certificates");
  hag_scan->add_option("--max-n", scan_opt.max_n, "max |lambda|");
  hag_scan->add_flag("--skew", scan_opt.skew, "include the J_mu^perp variant");
  hag_scan->callback([&] {
    ensure_cache();
    Emitter em{opt, sink()};
    for (int n = 1; n <= scan_opt.max_n; ++n)
      for (const Partition& la : partitions_of(n))
        for (const Partition& mu : partitions_of(n)) {
          auto cert = haglund_check(la, mu);
          json jc;
          if (cert) {
            jc = json::array();
            for (const Int& c : *cert) jc.push_back(int_to_json(c));
          }
          em.record(json{{"op", "haglund"},
                         {"lambda", la},
                         {"mu", mu},
                         {"in_Nq", cert.has_value()},
                         {"coefficients", jc}});
        }
    if (scan_opt.skew) {
      for (int n = 2; n <= scan_opt.max_n; ++n)
        for (const Partition& la : partitions_of(n))
          for (int m = 1; m < n; ++m)
            for (const Partition& mu : partitions_of(m))
              for (const Partition& nu : partitions_of(n - m)) {
                auto cert = haglund_skew_check(la, mu, nu);
                json jc;
                if (cert) {
                  jc = json::array();
                  for (const Int& c : *cert) jc.push_back(int_to_json(c));
                }
                em.record(json{{"op", "haglund-skew"},
                               {"lambda", la},
                               {"mu", mu},
                               {"nu", nu},
                               {"in_Nq", cert.has_value()},
                               {"coefficients", jc}});
              }
    }
  });

  // ---- cache ----
  auto* cache = app.add_subcommand("cache", "disk cache management");
  auto* cache_info = cache->add_subcommand("info", "show cache state");
  cache_info->callback([&] {
    const std::string path =
        opt.cache_path.empty() ? CacheFile::default_path() : opt.cache_path;
    const json entries = CacheFile::load(path);
    json keys = json::array();
    for (const auto& [k, v] : entries.items()) keys.push_back(k);
    Emitter{opt, sink()}.record(
        json{{"op", "cache-info"}, {"path", path}, {"entries", keys}});
  });
  auto* cache_clear = cache->add_subcommand("clear", "delete the cache file");
  cache_clear->callback([&] {
    const std::string path =
        opt.cache_path.empty() ? CacheFile::default_path() : opt.cache_path;
    const bool removed = std::remove(path.c_str()) == 0;
    Emitter{opt, sink()}.record(
        json{{"op", "cache-clear"}, {"path", path}, {"removed", removed}});
  });

  app.require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.name("macsym");
    app.parse(reversed);
    if (cache_attached) {
      Tables::instance().flush();
      Tables::instance().detach_cache();
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out_stream << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  return run_impl(args, out, err);
}

}  // namespace macsym::cli
