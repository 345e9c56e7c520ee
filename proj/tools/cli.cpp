#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "wittkit/errors.hpp"
#include "wittkit/etale.hpp"
#include "wittkit/presentation.hpp"
#include "wittkit/selftest.hpp"
#include "wittkit/sl2.hpp"
#include "wittkit/text_format.hpp"
#include "wittkit/witt.hpp"

namespace wittkit::cli {

namespace {

std::string fixed(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(12) << v;
  return os.str();
}

std::string element_list(const Subgroup& s) {
  std::string out = "{";
  bool first = true;
  for (const Element& x : s.elements()) {
    out += (first ? "" : ",") + x.to_string();
    first = false;
  }
  return out + "}";
}

std::vector<PreMetricGroup> read_all(const std::vector<std::string>& files) {
  std::vector<PreMetricGroup> out;
  for (const auto& f : files) {
    try {
      out.push_back(read_metric_group_file(f));
    } catch (const ParseError& e) {
      throw UserError(f + ":" + e.what());
    }
  }
  return out;
}

void print_class(const PreMetricGroup& c, std::ostream& out) {
  out << "form = " << c.to_string() << "\n";
  out << "status = " << to_string(c.degeneracy()) << "\n";
  const GaussSumValue gs = gauss_sum(c);
  out << "gauss_magnitude_sq = " << fixed(gs.magnitude_sq) << "\n";
  out << "gauss_argument = " << (gs.argument ? gs.argument->to_string() : "undefined") << "\n";
  if (!c.is_nondegenerate()) return;
  const WittClassHandle cls(c);
  out << "anisotropic_kernel = " << cls.aniso().to_string() << "\n";
  const auto order = witt_order(cls);
  out << "order = " << (order ? std::to_string(*order) : "> " + std::to_string(kDefaultMaxOrder)) << "\n";
}

void print_sl2_data(int k, std::ostream& out) {
  const auto d = sl2::Sl2Data::make(k);
  out << "level = " << k << "\n";
  out << "pointed_part = " << sl2::to_string(sl2::classify_level(k)) << "\n";
  const auto c = sl2::central_charge_additive(k);
  out << "c = " << c.numerator() << (c.denominator() == 1 ? "" : "/" + std::to_string(c.denominator())) << "\n";
  out << "central_charge = " << d.central_charge << "\n";
  out << "fpdim_category = " << fixed(d.fpdim_category) << "\n";
  out << "twists:\n";
  for (int j = 0; j <= k; ++j) out << "[" << j << "]: " << d.twists[static_cast<std::size_t>(j)] << "\n";
  out << "fpdims:\n";
  for (int j = 0; j <= k; ++j) out << "[" << j << "]: " << fixed(d.fpdims[static_cast<std::size_t>(j)]) << "\n";
}

void print_local_modules(int k, std::ostream& out) {
  const auto set = sl2::local_modules(k);
  out << "level = " << k << "\n";
  out << "algebra = [0]+[" << k << "]\n";
  out << "orbits:\n";
  for (const auto& o : set.orbits) {
    out << (o.fixed_point ? "{" + std::to_string(o.label) + "}" :
                            "{" + std::to_string(o.label) + "," + std::to_string(o.partner) + "}")
        << ": " << (o.local ? "local" : "non-local") << (o.fixed_point && o.local ? ", split" : "") << "\n";
  }
  out << "simples = " << set.simples.size() << "\n";
  for (const auto& s : set.simples) out << s.name << ": dim " << fixed(s.dim) << " twist " << s.twist << "\n";
  out << "sum_dim_sq = " << fixed(set.dim_sq_sum) << "\n";
  out << "fpdim_category/4 = " << fixed(sl2::fpdim_category(k) / 4.0) << "\n";
}

void print_etale(const PreMetricGroup& c1, const PreMetricGroup& c2, std::ostream& out) {
  const auto algebras = enumerate_etale(c1, c2);
  out << "algebras = " << algebras.size() << "\n";
  std::size_t n = 0;
  for (const auto& alg : algebras) {
    const auto& d = alg.datum;
    out << "algebra " << ++n << ": " << element_list(alg.algebra) << "\n";
    out << "  h1 = " << element_list(d.h1) << "\n";
    out << "  h2 = " << element_list(d.h2) << "\n";
    out << "  condensed1 = " << d.condensed1.to_string() << "\n";
    out << "  condensed2 = " << d.condensed2.to_string() << "\n";
    out << "  phi:";
    for (const auto& [x, y] : d.phi) out << " " << x.to_string() << "->" << y.to_string();
    out << "\n";
    out << "  prdim = " << (check_prdim(alg) ? "ok" : "FAILED") << "\n";
  }
}

void print_presentation(int max_level, std::ostream& out) {
  const auto p = sl2_witt_presentation(max_level);
  const auto s = analyze(p);
  out << "generators = " << p.generator_names.size() << " (x_k = [C(sl(2),k)])\n";
  out << "relations:\n";
  for (std::size_t r = 0; r < p.relations.rows(); ++r) out << "  " << format_relation(p, r) << "\n";
  out << "invariant_factors =";
  for (auto f : s.invariant_factors) out << " " << f;
  if (s.invariant_factors.empty()) out << " none";
  out << "\n";
  out << "free_rank = " << s.free_rank << "\n";
  out << "orders:\n";
  for (std::size_t i = 0; i < p.generator_names.size(); ++i) {
    std::vector<std::int64_t> v(p.generator_names.size(), 0);
    v[i] = 1;
    const auto o = element_order(s, v);
    out << "  " << p.generator_names[i] << ": " << (o ? std::to_string(*o) : "infinite") << "\n";
  }
}

void apply_cap_from_environment() {
  set_element_cap(kDefaultElementCap);
  if (const char* cap = std::getenv("WITTKIT_CAP")) {
    try {
      const unsigned long long v = std::stoull(cap);
      if (v == 0) throw std::invalid_argument("zero");
      set_element_cap(v);
    } catch (const std::exception&) {
      throw UserError(std::string("WITTKIT_CAP must be a positive integer, got '") + cap + "'");
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt classes of metric groups, C(sl(2),k) modular data, and etale algebras", "wittkit"};
  app.require_subcommand(1);

  auto* witt = app.add_subcommand("witt", "Witt-class arithmetic of metric group files");
  witt->require_subcommand(1);
  std::vector<std::string> files;
  int max_order = kDefaultMaxOrder;
  auto* witt_class = witt->add_subcommand("class", "summary of a form and its Witt class");
  witt_class->add_option("file", files, "metric group file")->required()->expected(1);
  auto* witt_order_cmd = witt->add_subcommand("order", "order of the Witt class");
  witt_order_cmd->add_option("file", files, "metric group file")->required()->expected(1);
  witt_order_cmd->add_option("--max", max_order, "search bound")->check(CLI::PositiveNumber);
  auto* witt_aniso = witt->add_subcommand("aniso", "anisotropic representative");
  witt_aniso->add_option("file", files, "metric group file")->required()->expected(1);
  auto* witt_add_cmd = witt->add_subcommand("add", "orthogonal sum of the given forms");
  witt_add_cmd->add_option("files", files, "metric group files")->required();
  auto* witt_eq = witt->add_subcommand("eq", "Witt equality of two forms");
  witt_eq->add_option("files", files, "two metric group files")->required()->expected(2);

  auto* switt = app.add_subcommand("switt", "equality modulo the Ising pointed subgroup");
  switt->require_subcommand(1);
  auto* switt_eq = switt->add_subcommand("eq", "super Witt equality of two forms");
  switt_eq->add_option("files", files, "two metric group files")->required()->expected(2);

  int level = 0;
  auto* sl2_cmd = app.add_subcommand("sl2", "C(sl(2),k) data");
  sl2_cmd->require_subcommand(1);
  auto* sl2_data = sl2_cmd->add_subcommand("data", "labels, twists, dimensions, central charge");
  sl2_data->add_option("K", level, "level")->required()->check(CLI::PositiveNumber);
  auto* sl2_condense = sl2_cmd->add_subcommand("condense", "local modules over [0]+[K], K = 0 mod 4");
  sl2_condense->add_option("K", level, "level")->required()->check(CLI::PositiveNumber);

  auto* etale = app.add_subcommand("etale", "etale algebras in products of pointed categories");
  etale->require_subcommand(1);
  auto* etale_enum = etale->add_subcommand("enumerate", "list etale algebras of C(A1,q1) x C(A2,q2)");
  etale_enum->add_option("files", files, "two metric group files")->required()->expected(2);

  int max_level = 28;
  auto* presentation = app.add_subcommand("presentation", "group generated by [C(sl(2),k)], k <= K");
  presentation->add_option("--max-level", max_level, "largest level K")->required()->check(CLI::PositiveNumber);

  bool quick = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  selftest_cmd->add_flag("--quick", quick, "smaller corpora");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUserError;
  }

  try {
    apply_cap_from_environment();
    if (*witt_class) {
      print_class(read_all(files).front(), out);
    } else if (*witt_order_cmd) {
      const auto o = witt_order(WittClassHandle(read_all(files).front()), max_order);
      out << "order = " << (o ? std::to_string(*o) : "> " + std::to_string(max_order)) << "\n";
    } else if (*witt_aniso) {
      out << format_metric_group(anisotropic_kernel(read_all(files).front()));
    } else if (*witt_add_cmd) {
      PreMetricGroup sum;
      for (const auto& f : read_all(files)) sum = direct_sum(sum, f);
      out << format_metric_group(sum);
    } else if (*witt_eq) {
      const auto forms = read_all(files);
      out << "equal = " << (witt_equal(WittClassHandle(forms[0]), WittClassHandle(forms[1])) ? "true" : "false")
          << "\n";
    } else if (*switt_eq) {
      const auto forms = read_all(files);
      out << "super_equal = "
          << (switt_equal(WittClassHandle(forms[0]), WittClassHandle(forms[1])) ? "true" : "false") << "\n";
    } else if (*sl2_data) {
      print_sl2_data(level, out);
    } else if (*sl2_condense) {
      print_local_modules(level, out);
    } else if (*etale_enum) {
      const auto forms = read_all(files);
      print_etale(forms[0], forms[1], out);
    } else if (*presentation) {
      print_presentation(max_level, out);
    } else if (*selftest_cmd) {
      const bool ok = selftest::report(selftest::run_all({quick}), out);
      return ok ? kExitOk : kExitInternalError;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const UserError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  }
  return kExitOk;
}

}  // namespace wittkit::cli
