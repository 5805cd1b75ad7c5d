#include "gpi/io.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gpi {

using nlohmann::json;

namespace {

json scalar_to_json(const Scalar& s) { return scalar_str(s); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw std::invalid_argument("scalar must be an integer or a \"p/q\" string");
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(scalar_to_json(c));
  return out;
}

Vec vec_from_json(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw std::invalid_argument("vector length does not match algebra dimension");
  Vec v;
  for (const auto& c : j) v.push_back(scalar_from_json(c));
  return v;
}

json mat_to_json(const Mat& m) {
  json out = json::array();
  for (const auto& r : m) out.push_back(vec_to_json(r));
  return out;
}

Mat mat_from_json(const json& j, int dim) {
  Mat m;
  for (const auto& r : j) m.push_back(vec_from_json(r, dim));
  if (static_cast<int>(m.size()) != dim)
    throw std::invalid_argument("matrix size does not match algebra dimension");
  return m;
}

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text) {
  json j = json::parse(text);
  AlgebraFile f;

  const json& g = j.at("group");
  f.algebra.group.labels = g.at("labels").get<std::vector<std::string>>();
  f.algebra.group.table = g.at("table").get<std::vector<std::vector<int>>>();
  f.algebra.group.identity = g.at("identity").get<int>();
  {
    auto bad = f.algebra.group.check();
    if (!bad.empty()) throw std::invalid_argument("invalid group: " + bad.front());
  }

  const json& a = j.at("algebra");
  f.algebra.dim = a.at("dim").get<int>();
  f.algebra.degree = a.at("degrees").get<std::vector<int>>();
  if (static_cast<int>(f.algebra.degree.size()) != f.algebra.dim)
    throw std::invalid_argument("degrees length does not match dim");
  for (int d : f.algebra.degree)
    if (d < 0 || d >= f.algebra.group.order())
      throw std::invalid_argument("degree index out of group range");
  for (const auto& entry : a.at("structure")) {
    if (!entry.is_array() || entry.size() != 4)
      throw std::invalid_argument("structure entries must be [i, j, k, coeff]");
    const int i = entry[0].get<int>(), jj = entry[1].get<int>(), k = entry[2].get<int>();
    for (int idx : {i, jj, k})
      if (idx < 0 || idx >= f.algebra.dim)
        throw std::invalid_argument("structure index out of range");
    const Scalar c = scalar_from_json(entry[3]);
    if (c != 0) f.algebra.structure[{i, jj}].emplace_back(k, c);
  }
  if (a.contains("unit")) f.algebra.unit = vec_from_json(a.at("unit"), f.algebra.dim);
  {
    auto bad = f.algebra.check_axioms();
    if (!bad.empty()) throw std::invalid_argument("invalid algebra: " + bad.front());
  }

  if (j.contains("action")) {
    const json& act = j.at("action");
    const std::string kind = act.at("kind").get<std::string>();
    if (kind == "subalgebra") {
      std::vector<Vec> basis;
      for (const auto& v : act.at("basis")) basis.push_back(vec_from_json(v, f.algebra.dim));
      f.action_subalgebra = std::move(basis);
    } else if (kind == "multipliers") {
      std::vector<Multiplier> pairs;
      std::vector<int> degrees;
      for (const auto& p : act.at("pairs")) {
        Multiplier m;
        m.R = mat_from_json(p.at("R"), f.algebra.dim);
        m.L = mat_from_json(p.at("L"), f.algebra.dim);
        pairs.push_back(std::move(m));
        degrees.push_back(p.at("degree").get<int>());
      }
      f.action_multipliers = std::make_pair(std::move(pairs), std::move(degrees));
    } else {
      throw std::invalid_argument("unknown action kind: " + kind);
    }
  }

  if (j.contains("wedderburn")) {
    const json& w = j.at("wedderburn");
    WedderburnData wd;
    for (const auto& comp : w.at("components")) {
      std::vector<Vec> basis;
      for (const auto& v : comp) basis.push_back(vec_from_json(v, f.algebra.dim));
      wd.components.push_back(std::move(basis));
    }
    for (const auto& v : w.at("radical")) wd.radical.push_back(vec_from_json(v, f.algebra.dim));
    f.wedderburn = std::move(wd);
  }
  return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_json(ss.str());
}

std::string algebra_json(const AlgebraFile& f) {
  json j;
  j["group"]["labels"] = f.algebra.group.labels;
  j["group"]["table"] = f.algebra.group.table;
  j["group"]["identity"] = f.algebra.group.identity;
  j["algebra"]["dim"] = f.algebra.dim;
  j["algebra"]["degrees"] = f.algebra.degree;
  json st = json::array();
  for (const auto& [ij, terms] : f.algebra.structure)
    for (const auto& [k, c] : terms) st.push_back({ij.first, ij.second, k, scalar_to_json(c)});
  j["algebra"]["structure"] = std::move(st);
  if (f.algebra.unit) j["algebra"]["unit"] = vec_to_json(*f.algebra.unit);
  if (f.action_subalgebra) {
    j["action"]["kind"] = "subalgebra";
    json b = json::array();
    for (const auto& v : *f.action_subalgebra) b.push_back(vec_to_json(v));
    j["action"]["basis"] = std::move(b);
  } else if (f.action_multipliers) {
    j["action"]["kind"] = "multipliers";
    json ps = json::array();
    for (std::size_t i = 0; i < f.action_multipliers->first.size(); ++i) {
      json p;
      p["R"] = mat_to_json(f.action_multipliers->first[i].R);
      p["L"] = mat_to_json(f.action_multipliers->first[i].L);
      p["degree"] = f.action_multipliers->second[i];
      ps.push_back(std::move(p));
    }
    j["action"]["pairs"] = std::move(ps);
  }
  if (f.wedderburn) {
    json comps = json::array();
    for (const auto& comp : f.wedderburn->components) {
      json b = json::array();
      for (const auto& v : comp) b.push_back(vec_to_json(v));
      comps.push_back(std::move(b));
    }
    j["wedderburn"]["components"] = std::move(comps);
    json rad = json::array();
    for (const auto& v : f.wedderburn->radical) rad.push_back(vec_to_json(v));
    j["wedderburn"]["radical"] = std::move(rad);
  }
  return j.dump();  // object keys are stored sorted: canonical
}

void save_algebra_file(const AlgebraFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << algebra_json(f) << "\n";
}

ActingAlgebra make_action(const AlgebraFile& f) {
  if (f.action_subalgebra)
    return acting_algebra_from_subalgebra(f.algebra, *f.action_subalgebra);
  if (f.action_multipliers)
    return acting_algebra_from_multipliers(f.algebra, f.action_multipliers->first,
                                           f.action_multipliers->second);
  throw std::invalid_argument("algebra file declares no action");
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, data.data(), data.size());
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

FileCache::FileCache(std::string dir, std::string algebra_key)
    : dir_(std::move(dir)), key_(std::move(algebra_key)) {
  std::filesystem::create_directories(dir_);
}

std::string FileCache::path_for(const MultiDegree& md) const {
  json j;
  j["algebra"] = key_;
  j["multidegree"] = md.counts;
  return dir_ + "/" + sha256_hex(j.dump()) + ".json";
}

std::optional<CodimResult> FileCache::get(const MultiDegree& md) const {
  std::ifstream in(path_for(md));
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    CodimResult r = parse_codim_result(ss.str());
    if (r.md.counts != md.counts) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void FileCache::put(const MultiDegree& md, const CodimResult& r) const {
  const std::string path = path_for(md);
  std::ofstream out(path + ".tmp");
  if (!out) return;
  CodimResult stamped = r;
  stamped.algebra_hash = key_;
  out << codim_result_json(stamped) << "\n";
  out.close();
  std::filesystem::rename(path + ".tmp", path);
}

CodimCache FileCache::cache() const {
  CodimCache c;
  c.get = [*this](const MultiDegree& md) { return get(md); };
  c.put = [*this](const MultiDegree& md, const CodimResult& r) { put(md, r); };
  return c;
}

std::string codim_result_json(const CodimResult& r) {
  json j;
  j["multidegree"] = r.md.counts;
  j["rank"] = r.rank;
  j["rows"] = r.rows;
  j["algebra"] = r.algebra_hash;
  return j.dump();
}

CodimResult parse_codim_result(const std::string& text) {
  json j = json::parse(text);
  CodimResult r;
  r.md.counts = j.at("multidegree").get<std::vector<int>>();
  r.rank = j.at("rank").get<std::uint64_t>();
  r.rows = j.at("rows").get<std::uint64_t>();
  r.algebra_hash = j.value("algebra", "");
  return r;
}

}  // namespace gpi
