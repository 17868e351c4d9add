#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "tangles/forbidden.hpp"
#include "tangles/universe.hpp"

namespace tangles {

// A parsed instance file: ground set, weighted graph, the enumerated
// separation system, and the forbidden family (cover or explicit).
class Instance {
 public:
  static Instance parse_file(const std::string& path, bool allow_trivial_sides = false);
  static Instance parse_json(const nlohmann::json& doc, bool allow_trivial_sides = false);

  const Universe& universe() const { return *universe_; }
  const ForbiddenOracle& forbidden() const { return *forbidden_; }
  // nullptr when the instance uses the cover oracle
  const ExplicitForbidden* explicit_forbidden() const { return explicit_; }

 private:
  Instance() = default;

  std::unique_ptr<Universe> universe_;
  std::unique_ptr<ForbiddenOracle> forbidden_;
  const ExplicitForbidden* explicit_ = nullptr;
};

}  // namespace tangles
