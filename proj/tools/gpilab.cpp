#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gpi/builtins.hpp"
#include "gpi/cocharacter.hpp"
#include "gpi/parser.hpp"
#include "gpi/tideal.hpp"
#include "json.hpp"

using namespace gpi;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kTruncated = 2, kNegative = 3;

struct Session {
  AlgebraFile file;
  ActingAlgebra action;
  std::string key;  // SHA-256 of the canonical definition
  Limits limits;
  std::string format = "table";
  std::optional<FileCache> cache;

  const GradedAlgebra& A() const { return file.algebra; }
};

struct Options {
  std::string algebra_path, builtin_name, cache_dir, format = "table";
  int threads = 1;
  std::uint64_t max_rows = 50'000'000;
};

Session open_session(const Options& opt) {
  Session s;
  if (!opt.builtin_name.empty()) {
    Builtin b = builtin(opt.builtin_name);
    s.file = std::move(b.file);
    s.action = std::move(b.action);
    s.key = sha256_hex(b.canonical_json);
  } else if (!opt.algebra_path.empty()) {
    s.file = load_algebra_file(opt.algebra_path);
    s.action = make_action(s.file);
    s.key = sha256_hex(algebra_json(s.file));
  } else {
    throw CLI::ValidationError("one of --algebra or --builtin is required");
  }
  s.limits.threads = opt.threads;
  s.limits.max_rows = opt.max_rows;
  s.format = opt.format;
  std::string dir = opt.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("GPILAB_CACHE")) dir = env;
  if (!dir.empty()) s.cache.emplace(dir, s.key);
  return s;
}

std::string md_str(const MultiDegree& md) {
  std::string out;
  for (std::size_t i = 0; i < md.counts.size(); ++i)
    out += (i ? "," : "") + std::to_string(md.counts[i]);
  return out;
}

MultiDegree parse_md(const std::string& text, int blocks) {
  MultiDegree md;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) md.counts.push_back(std::stoi(part));
  if (static_cast<int>(md.counts.size()) != blocks)
    throw CLI::ValidationError("multidegree needs " + std::to_string(blocks) + " entries");
  return md;
}

int cmd_codim(const Session& s, int n, const std::string& md_text) {
  CodimCache cc;
  const CodimCache* ccp = nullptr;
  if (s.cache) {
    cc = s.cache->cache();
    ccp = &cc;
  }
  if (!md_text.empty()) {
    MultiDegree md = parse_md(md_text, s.A().group.order());
    std::optional<CodimResult> r;
    if (ccp && ccp->get) r = ccp->get(md);
    if (!r) {
      r = codim_multidegree(s.A(), s.action, md, s.limits);
      r->algebra_hash = s.key;
      if (ccp && ccp->put) ccp->put(md, *r);
    }
    if (s.format == "json") {
      std::cout << codim_result_json(*r) << "\n";
    } else if (s.format == "csv") {
      std::cout << "multidegree,rank,rows\n"
                << "\"" << md_str(md) << "\"," << r->rank << "," << r->rows << "\n";
    } else {
      std::cout << "c_(" << md_str(md) << ") = " << r->rank << "\n";
    }
    return kOk;
  }
  auto series = codim_series(s.A(), s.action, n, s.limits, ccp);
  bool truncated = false;
  if (s.format == "json") {
    json out = json::array();
    for (const auto& e : series) {
      json row;
      row["n"] = e.n;
      if (e.c)
        row["c"] = e.c->str();
      else {
        row["error"] = e.error;
        truncated = true;
      }
      out.push_back(std::move(row));
    }
    std::cout << out.dump() << "\n";
  } else {
    if (s.format == "csv") std::cout << "n,c\n";
    for (const auto& e : series) {
      if (!e.c) truncated = true;
      const std::string v = e.c ? e.c->str() : ("truncated: " + e.error);
      if (s.format == "csv")
        std::cout << e.n << "," << v << "\n";
      else
        std::cout << "c_" << e.n << " = " << v << "\n";
    }
  }
  return truncated ? kTruncated : kOk;
}

int cmd_identity(const Session& s, const std::string& text) {
  GenPolynomial f = parse_polynomial(s.action, text);
  auto w = identity_witness(s.A(), s.action, f);
  if (!w) {
    std::cout << "IDENTITY\n";
    return kOk;
  }
  std::cout << "NOT an identity\n";
  for (const auto& [v, vec] : w->assignment) {
    std::cout << "  " << (v.first == 0 ? "y" : v.first == 1 ? "z" : "x") << v.second << " = [";
    for (std::size_t i = 0; i < vec.size(); ++i)
      std::cout << (i ? ", " : "") << scalar_str(vec[i]);
    std::cout << "]\n";
  }
  std::cout << "  value = [";
  for (std::size_t i = 0; i < w->value.size(); ++i)
    std::cout << (i ? ", " : "") << scalar_str(w->value[i]);
  std::cout << "]\n";
  return kNegative;
}

int cmd_tideal(const Session& s, int n, const std::string& gen_file,
               const std::vector<std::string>& gens) {
  GeneratorSet S;
  std::vector<std::string> lines = gens;
  if (!gen_file.empty()) {
    std::ifstream in(gen_file);
    if (!in) throw CLI::ValidationError("cannot open " + gen_file);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
        lines.push_back(line);
    }
  }
  if (lines.empty()) throw CLI::ValidationError("no generators given");
  for (const auto& line : lines) S.generators.push_back(parse_polynomial(s.action, line));
  for (std::size_t i = 0; i < S.generators.size(); ++i)
    if (!is_identity(s.A(), s.action, S.generators[i])) {
      std::cout << "FAIL: generator " << i + 1 << " is not an identity\n";
      return kNegative;
    }
  BasisReport rep = verify_basis(S, s.A(), s.action, n, s.limits);
  if (s.format == "json") {
    json out;
    out["n"] = rep.n;
    out["pass"] = rep.pass;
    out["truncated"] = rep.truncated;
    json rows = json::array();
    for (const auto& r : rep.rows) {
      json row;
      row["multidegree"] = r.md.counts;
      row["consequences"] = r.consequence_dim;
      row["codim"] = r.codim;
      row["dim_P"] = r.dim_p.str();
      row["status"] = r.truncated ? "TRUNCATED" : r.pass ? "PASS" : "FAIL";
      if (!r.note.empty()) row["note"] = r.note;
      rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    if (rep.witness) {
      out["witness_multidegree"] = rep.witness_md->counts;
      out["witness_terms"] = rep.witness->terms.size();
    }
    std::cout << out.dump() << "\n";
  } else {
    const char* sep = s.format == "csv" ? "," : "  ";
    if (s.format == "csv") std::cout << "multidegree,consequences,codim,dim_P,status\n";
    for (const auto& r : rep.rows)
      std::cout << "(" << md_str(r.md) << ")" << sep << r.consequence_dim << sep << r.codim << sep
                << r.dim_p.str() << sep
                << (r.truncated ? "TRUNCATED" : r.pass ? "PASS" : "FAIL") << "\n";
    std::cout << (rep.pass ? (rep.truncated ? "PASS (with truncated rows)" : "PASS") : "FAIL")
              << "\n";
    if (rep.witness) {
      std::cout << "kernel witness at (" << md_str(*rep.witness_md) << "):";
      for (const auto& [k, c] : rep.witness->terms) {
        std::cout << " + " << scalar_str(c) << "*[";
        for (std::size_t i = 0; i < k.size(); ++i) std::cout << (i ? " " : "") << k[i];
        std::cout << "]";
      }
      std::cout << "\n";
    }
  }
  if (rep.truncated && rep.pass) return kTruncated;
  return rep.pass ? kOk : kNegative;
}

int cmd_cochar(const Session& s, int n) {
  MultiplicityTable table = cocharacter_table(s.A(), s.action, n, s.limits);
  if (s.format == "json") {
    json out = json::array();
    for (const auto& e : table.entries) {
      json row;
      row["r"] = partition_weight(e.shapes[0]);
      row["lambda"] = partition_str(e.shapes[0]);
      if (e.shapes.size() > 1) row["mu"] = partition_str(e.shapes[1]);
      row["m"] = e.m;
      json dims = json::array();
      for (const auto& d : e.dims) dims.push_back(d.str());
      row["d"] = std::move(dims);
      row["contribution"] = e.contribution.str();
      out.push_back(std::move(row));
    }
    std::cout << out.dump() << "\n";
  } else {
    const char* sep = s.format == "csv" ? "," : "  ";
    std::cout << "r" << sep << "lambda" << sep << "mu" << sep << "m" << sep << "d_lambda" << sep
              << "d_mu" << sep << "contribution\n";
    for (const auto& e : table.entries) {
      std::cout << partition_weight(e.shapes[0]) << sep << partition_str(e.shapes[0]) << sep
                << (e.shapes.size() > 1 ? partition_str(e.shapes[1]) : std::string("-")) << sep
                << e.m << sep << e.dims[0].str() << sep
                << (e.dims.size() > 1 ? e.dims[1].str() : std::string("-")) << sep
                << e.contribution.str() << "\n";
    }
  }
  auto bad = check_table_consistency(table, s.A(), s.action, s.limits);
  for (const auto& b : bad) std::cerr << "inconsistency: " << b << "\n";
  return bad.empty() ? kOk : kNegative;
}

int cmd_exponent(const Session& s, int n_max) {
  if (!s.file.wedderburn)
    throw CLI::ValidationError("the algebra definition has no wedderburn block");
  auto bad = validate(*s.file.wedderburn, s.A());
  if (!bad.empty()) {
    for (const auto& b : bad) std::cerr << "invalid wedderburn data: " << b << "\n";
    return kNegative;
  }
  GrowthReport rep = growth_crosscheck(s.A(), s.action, *s.file.wedderburn, n_max, s.limits);
  if (s.format == "json") {
    json out;
    out["exponent"] = rep.d;
    out["fitted_u"] = rep.fitted_u;
    out["pass"] = rep.pass;
    json series = json::array();
    for (const auto& e : rep.series) {
      json row;
      row["n"] = e.n;
      if (e.c) row["c"] = e.c->str();
      if (e.ratio) row["ratio"] = scalar_str(*e.ratio);
      series.push_back(std::move(row));
    }
    out["series"] = std::move(series);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "graded exponent = " << rep.d << "\n";
    for (const auto& e : rep.series)
      if (e.c)
        std::cout << "c_" << e.n << " = " << e.c->str()
                  << (e.ratio ? "  ratio " + scalar_str(*e.ratio) : "") << "\n";
    for (const auto& note : rep.notes) std::cout << note << "\n";
    std::cout << "growth crosscheck: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass ? kOk : kNegative;
}

int cmd_multiplier(const Session& s) {
  auto basis = multiplier_algebra(s.A());
  auto graded = grading_of_M(s.A());
  if (s.format == "json") {
    json out;
    out["dim"] = basis.size();
    json split;
    for (const auto& [g, part] : graded) split[s.A().group.labels[g]] = part.size();
    out["graded_split"] = std::move(split);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "dim M(A) = " << basis.size() << "\n";
    for (const auto& [g, part] : graded)
      std::cout << "  degree " << s.A().group.labels[g] << ": " << part.size() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gpilab: invariants of graded W-algebras over exact rationals"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--algebra", opt.algebra_path, "algebra definition JSON file")->expected(1);
  app.add_option("--builtin", opt.builtin_name, "builtin algebra (ut2:full, ut2:D, ut2:C, ut2:F)");
  app.add_option("--cache", opt.cache_dir, "result cache directory (default $GPILAB_CACHE)");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-rows", opt.max_rows, "row budget before truncation")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  int n = 0, n_max = 5;
  std::string md_text, poly_text, gen_file;
  std::vector<std::string> gens;

  auto* codim = app.add_subcommand("codim", "codimension sequence or one multidegree");
  codim->add_option("--n", n, "compute c_1..c_n");
  codim->add_option("--multidegree", md_text, "comma-separated multidegree, e.g. 2,1");

  auto* identity = app.add_subcommand("identity", "test a generalized identity");
  identity->add_option("polynomial", poly_text, "polynomial text")->required();

  auto* tideal = app.add_subcommand("tideal", "verify a T-ideal generator set at degree n");
  tideal->add_option("--n", n, "total degree")->required();
  tideal->add_option("--generators-file", gen_file, "file with one generator per line");
  tideal->add_option("--generators", gens, "generators inline");

  auto* cochar = app.add_subcommand("cochar", "cocharacter multiplicity table");
  cochar->add_option("--n", n, "total degree")->required();

  auto* exponent = app.add_subcommand("exponent", "graded exponent and growth crosscheck");
  exponent->add_option("--n-max", n_max, "series length for the crosscheck");

  app.add_subcommand("multiplier", "multiplier algebra dimensions");

  try {
    app.parse(argc, argv);
    Session s = open_session(opt);
    if (codim->parsed()) {
      if (n <= 0 && md_text.empty())
        throw CLI::ValidationError("codim needs --n or --multidegree");
      return cmd_codim(s, n, md_text);
    }
    if (identity->parsed()) return cmd_identity(s, poly_text);
    if (tideal->parsed()) return cmd_tideal(s, n, gen_file, gens);
    if (cochar->parsed()) return cmd_cochar(s, n);
    if (exponent->parsed()) return cmd_exponent(s, n_max);
    return cmd_multiplier(s);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TruncationError& e) {
    std::cerr << "truncated: " << e.what() << "\n";
    return kTruncated;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
