// Command-line front end. Every subcommand prints markdown, JSON or CSV and
// exits 0 on success, 1 on usage errors, 2 when sigma < 2, 3 when a
// mathematical precondition fails and 4 when a feasibility cap is hit.

#include "eag/errors.hpp"
#include "eag/genvec.hpp"
#include "eag/group_table.hpp"
#include "eag/hyper_fermat.hpp"
#include "eag/io.hpp"
#include "eag/maximality.hpp"
#include "eag/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using eag::io::Json;

enum class Format { markdown, json, csv };

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Markdown and CSV views of a report are its top-level fields.
void emit(std::ostream& out, Format f, std::string_view kind, const Json& payload, const std::string& headline = {}) {
  switch (f) {
    case Format::json: out << eag::io::document(kind, payload).dump(2) << "\n"; return;
    case Format::csv: {
      std::vector<std::vector<std::string>> rows{{"field", "value"}};
      for (const auto& [k, v] : payload.items()) rows.push_back({k, scalar_text(v)});
      out << eag::io::to_csv(rows);
      return;
    }
    case Format::markdown:
      out << "## " << kind << "\n\n";
      if (!headline.empty()) out << headline << "\n\n";
      for (const auto& [k, v] : payload.items()) out << "- " << k << ": " << scalar_text(v) << "\n";
      return;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

eag::Rational parse_rational(const std::string& s) {
  try {
    return eag::Rational(s);
  } catch (const std::exception&) {
    throw eag::UsageError("not a rational number: '" + s + "'");
  }
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw eag::UsageError("not a number: '" + s + "'");
  return v;
}

// "inf", "x" or "x:y" for x + iy.
eag::ProjPoint<eag::Complex> parse_pin(const std::string& s) {
  if (s == "inf") return eag::ProjPoint<eag::Complex>::infinity();
  const auto parts = split(s, ':');
  if (parts.size() == 1) return eag::ProjPoint<eag::Complex>::finite(parse_double(parts[0]));
  if (parts.size() == 2) return eag::ProjPoint<eag::Complex>::finite({parse_double(parts[0]), parse_double(parts[1])});
  throw eag::UsageError("pin must be 'inf', 'x' or 'x:y', got '" + s + "'");
}

// Catalog names: trivial, cyclic:N, dihedral:N (order 2N), ea:P:N, s3, a4,
// s4, a5, and products joined by '*'.
eag::GroupTable catalog_group(const std::string& name) {
  namespace g = eag::groups;
  const auto factors = split(name, '*');
  if (factors.size() > 1) {
    eag::GroupTable out = catalog_group(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) out = g::direct_product(out, catalog_group(factors[i]));
    return out;
  }
  const auto parts = split(name, ':');
  auto arg = [&](std::size_t i) {
    if (parts.size() <= i) throw eag::UsageError("group '" + name + "' is missing a parameter");
    return static_cast<int>(parse_double(parts[i]));
  };
  const std::string& head = parts.empty() ? name : parts[0];
  if (head == "trivial") return g::trivial();
  if (head == "cyclic") return g::cyclic(arg(1));
  if (head == "dihedral") return g::dihedral(arg(1));
  if (head == "ea") return g::elementary_abelian(arg(1), arg(2));
  if (head == "s3") return g::symmetric3();
  if (head == "a4") return g::alternating4();
  if (head == "s4") return g::symmetric4();
  if (head == "a5") return g::alternating5();
  throw eag::UsageError("unknown group '" + name + "'");
}

struct SpecFlags {
  int p = 2, n = 1, rho = 0, r = 0;
  eag::EAActionSpec spec() const { return {p, n, rho, r}; }
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--p", f.p, "prime")->required();
  cmd->add_option("--n", f.n, "p-rank of the group")->required();
  cmd->add_option("--rho", f.rho, "orbit genus")->default_val(0);
  cmd->add_option("--r", f.r, "number of branch points")->default_val(0);
}

std::string verdict_line(const eag::EAActionSpec& s, bool yes, std::string_view what) {
  std::ostringstream os;
  os << "C_" << s.p << "^" << s.n << " with signature " << s.signature().str() << (yes ? " is " : " is not ") << what;
  return os.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw eag::UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw eag::UsageError(path + ": " + e.what());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Elementary abelian group actions on surfaces and hyper-Fermat curves"};
  app.require_subcommand(1);
  std::string format_name = "markdown";
  app.add_option("--format", format_name, "markdown, json or csv")
      ->check(CLI::IsMember({"markdown", "json", "csv"}))
      ->capture_default_str();

  SpecFlags unique_f, count_f, maximal_f;
  auto* unique = app.add_subcommand("unique", "decide whether the action is topologically unique");
  add_spec_flags(unique, unique_f);
  auto* count = app.add_subcommand("count", "count topological classes");
  add_spec_flags(count, count_f);
  auto* maximal = app.add_subcommand("maximal", "decide maximality of a unique action");
  add_spec_flags(maximal, maximal_f);
  std::uint64_t budget = 20'000'000;
  maximal->add_option("--budget", budget, "search work budget")->capture_default_str();

  int which = 1;
  auto* tables = app.add_subcommand("tables", "render a classification table");
  tables->add_option("--which", which, "table number 1-4")->required()->check(CLI::Range(1, 4));

  int fp = 3, fn = 0, samples = 20;
  std::uint64_t seed = 1;
  std::string w_text, line_file, pins_text;
  auto* fermat = app.add_subcommand("fermat", "build and check a hyper-Fermat curve");
  fermat->add_option("--p", fp, "prime")->required();
  fermat->add_option("--n", fn, "projective dimension; must match the data if given");
  auto* w_opt = fermat->add_option("--w", w_text, "distinct rationals w_0,...,w_n for the Vandermonde line");
  auto* line_opt = fermat->add_option("--line", line_file, "JSON file holding the matrix C, or a document with C");
  w_opt->excludes(line_opt);
  fermat->add_option("--pins", pins_text, "three pins for the branch points: inf, x or x:y (default 0,1,inf)")
      ->excludes(w_opt);
  fermat->add_option("--samples", samples, "smoothness samples")->capture_default_str();
  fermat->add_option("--seed", seed, "sampling seed")->capture_default_str();

  std::string group_name, table_file, sig_text;
  auto* orbits = app.add_subcommand("orbits", "count genus-zero generating vector classes over a finite group");
  auto* group_opt = orbits->add_option("--group", group_name, "catalog group, e.g. cyclic:10, dihedral:4, a5");
  auto* file_opt = orbits->add_option("--table-file", table_file, "Cayley table file");
  group_opt->excludes(file_opt);
  orbits->add_option("--sig", sig_text, "signature, e.g. \"(0; 2,5,10)\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const Format format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::markdown;
  auto& out = std::cout;

  if (*unique) {
    const auto rep = eag::uniqueness_report(unique_f.spec());
    emit(out, format, "uniqueness", eag::io::to_json(rep), verdict_line(rep.spec, rep.unique, "topologically unique"));
  } else if (*count) {
    const auto spec = count_f.spec();
    eag::require_hyperbolic_genus(spec);
    emit(out, format, "class-count", eag::io::to_json(eag::count_classes(spec)));
  } else if (*maximal) {
    const auto v = eag::is_maximal(maximal_f.spec(), budget);
    emit(out, format, "maximality", eag::io::to_json(v), verdict_line(v.spec, v.maximal, "maximal"));
  } else if (*tables) {
    const auto t = eag::classification_table(which);
    if (format == Format::json) out << eag::io::document("table", eag::io::to_json(t)).dump(2) << "\n";
    else if (format == Format::csv) out << eag::render_csv(t);
    else out << eag::render_markdown(t);
  } else if (*fermat) {
    if (w_text.empty() == line_file.empty()) throw eag::UsageError("give exactly one of --w and --line");
    eag::FermatReport rep;
    if (!w_text.empty()) {
      std::vector<eag::Rational> w;
      for (const auto& t : split(w_text, ',')) w.push_back(parse_rational(t));
      if (fn != 0 && fn + 1 != static_cast<int>(w.size()))
        throw eag::UsageError("--n " + std::to_string(fn) + " needs " + std::to_string(fn + 1) + " values of w");
      rep = eag::fermat_vandermonde(fp, w, samples, seed);
    } else {
      const Json j = load_json_file(line_file);
      const auto line = eag::io::complex_matrix_from_json(j.is_object() ? j.at("C") : j);
      std::array<eag::ProjPoint<eag::Complex>, 3> pins = {eag::ProjPoint<eag::Complex>::finite(0),
                                                         eag::ProjPoint<eag::Complex>::finite(1),
                                                         eag::ProjPoint<eag::Complex>::infinity()};
      if (!pins_text.empty()) {
        const auto parts = split(pins_text, ',');
        if (parts.size() != 3) throw eag::UsageError("--pins needs exactly three entries");
        for (int i = 0; i < 3; ++i) pins[i] = parse_pin(parts[i]);
      }
      if (fn != 0 && fn + 1 != line.cols())
        throw eag::UsageError("--n does not match the number of columns of C");
      rep = eag::fermat_line(fp, line, pins, samples, seed);
    }
    emit(out, format, "fermat", eag::io::to_json(rep));
  } else if (*orbits) {
    if (group_name.empty() == table_file.empty()) throw eag::UsageError("give exactly one of --group and --table-file");
    const auto g = group_name.empty() ? eag::GroupTable::load(table_file) : catalog_group(group_name);
    const auto sig = eag::Signature::parse(sig_text);
    emit(out, format, "orbits", eag::io::to_json(eag::count_orbits(g, sig)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const eag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
