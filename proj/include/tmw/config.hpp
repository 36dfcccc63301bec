#ifndef TMW_CONFIG_HPP
#define TMW_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tmw {

// Minimal TOML subset: [sections], key = value with strings, integers,
// booleans and flat arrays of strings/integers. Enough for the experiment
// configs; comments start with '#'.
using TomlValue =
    std::variant<std::string, long, bool, std::vector<std::string>, std::vector<long>>;
using TomlTable = std::map<std::string, std::map<std::string, TomlValue>>;

TomlTable toml_parse(const std::string& text);
std::string toml_emit(const TomlTable& table);

// experiment configuration, mirroring the TOML layout
struct ExperimentConfig {
  // [module]
  std::string kind = "carlitz";  // carlitz | carlitz_tensor
  int q = 2;
  int m = 1;
  int rank = 1;
  // [count]
  std::vector<std::string> a_list;
  int degree_lo = 0, degree_hi = 0;  // used when a_list is empty
  int delta = 2;
  int prec = 48;
  std::vector<std::string> parametrization;  // polynomials in w, one per coordinate
  std::vector<std::string> algebraic_part;   // hypersurface polynomials in z1..zd
  int region_d = 1;
  std::string out_json, out_csv;
  // [torsion]
  std::vector<std::string> torsion_a;
  int torsion_scope_q = 0;  // 0 = base field
  // [submodule]
  int jmax = 8;
  // [exp]
  int exp_order = 6;
  // [gallery]
  std::string isogeny = "identity";  // identity | half_twist
  // global
  unsigned long seed = 0;

  static ExperimentConfig from_toml(const TomlTable& t);
  TomlTable to_toml() const;
  bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig load_config(const std::string& path);

}  // namespace tmw

#endif  // TMW_CONFIG_HPP
