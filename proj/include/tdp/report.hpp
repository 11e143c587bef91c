#pragma once

#include <string>

#include <json.hpp>

namespace tdp {

// One theorem/conjecture check on one instance. Failures always carry a
// witness with enough data to reproduce the violation on its own.
struct CheckReport {
  enum class Status { pass, fail, unconverged, skipped };

  std::string check_id;
  std::string instance;
  Status status = Status::skipped;
  nlohmann::ordered_json witness;  // null unless the check produced one
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();

  static CheckReport passed(std::string id, std::string instance,
                            nlohmann::ordered_json metrics = nlohmann::ordered_json::object());
  static CheckReport failed(std::string id, std::string instance, nlohmann::ordered_json witness,
                            nlohmann::ordered_json metrics = nlohmann::ordered_json::object());
  static CheckReport skipped(std::string id, std::string instance, std::string reason);
  static CheckReport unconverged(std::string id, std::string instance,
                                 nlohmann::ordered_json metrics = nlohmann::ordered_json::object());

  bool ok() const { return status == Status::pass || status == Status::skipped; }

  nlohmann::ordered_json to_json() const;
};

std::string to_string(CheckReport::Status s);

}  // namespace tdp
