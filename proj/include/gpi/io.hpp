#ifndef GPI_IO_HPP
#define GPI_IO_HPP

#include <optional>
#include <string>

#include "gpi/exponent.hpp"
#include "gpi/generic.hpp"

namespace gpi {

/// Parsed algebra-definition file: the algebra plus optional action and
/// Wedderburn blocks.
struct AlgebraFile {
  GradedAlgebra algebra;
  // action: exactly one of the two when present
  std::optional<std::vector<Vec>> action_subalgebra;
  std::optional<std::pair<std::vector<Multiplier>, std::vector<int>>> action_multipliers;
  std::optional<WedderburnData> wedderburn;
};

AlgebraFile parse_algebra_json(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);

/// Canonical serialization (sorted keys, no whitespace); the cache hash input.
std::string algebra_json(const AlgebraFile& f);
void save_algebra_file(const AlgebraFile& f, const std::string& path);

/// Materializes the acting algebra from the file's action block.
ActingAlgebra make_action(const AlgebraFile& f);

std::string sha256_hex(const std::string& data);

/// One file per CodimResult under dir, keyed by SHA-256 of (canonical algebra
/// JSON including the action, multidegree).
class FileCache {
 public:
  FileCache(std::string dir, std::string algebra_key);

  std::optional<CodimResult> get(const MultiDegree& md) const;
  void put(const MultiDegree& md, const CodimResult& r) const;
  CodimCache cache() const;
  std::string path_for(const MultiDegree& md) const;

 private:
  std::string dir_, key_;
};

std::string codim_result_json(const CodimResult& r);
CodimResult parse_codim_result(const std::string& text);

}  // namespace gpi

#endif
