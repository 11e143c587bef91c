#include "tdp/report.hpp"

#include <stdexcept>

namespace tdp {

CheckReport CheckReport::passed(std::string id, std::string instance,
                                nlohmann::ordered_json metrics) {
  CheckReport r;
  r.check_id = std::move(id);
  r.instance = std::move(instance);
  r.status = Status::pass;
  r.metrics = std::move(metrics);
  return r;
}

CheckReport CheckReport::failed(std::string id, std::string instance,
                                nlohmann::ordered_json witness, nlohmann::ordered_json metrics) {
  if (witness.is_null()) throw std::invalid_argument("CheckReport: fail requires a witness");
  CheckReport r;
  r.check_id = std::move(id);
  r.instance = std::move(instance);
  r.status = Status::fail;
  r.witness = std::move(witness);
  r.metrics = std::move(metrics);
  return r;
}

CheckReport CheckReport::skipped(std::string id, std::string instance, std::string reason) {
  CheckReport r;
  r.check_id = std::move(id);
  r.instance = std::move(instance);
  r.status = Status::skipped;
  r.metrics["reason"] = std::move(reason);
  return r;
}

CheckReport CheckReport::unconverged(std::string id, std::string instance,
                                     nlohmann::ordered_json metrics) {
  CheckReport r;
  r.check_id = std::move(id);
  r.instance = std::move(instance);
  r.status = Status::unconverged;
  r.metrics = std::move(metrics);
  return r;
}

std::string to_string(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::pass: return "pass";
    case CheckReport::Status::fail: return "fail";
    case CheckReport::Status::unconverged: return "unconverged";
    case CheckReport::Status::skipped: return "skipped";
  }
  return "unknown";
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check_id"] = check_id;
  j["instance"] = instance;
  j["status"] = to_string(status);
  j["witness"] = witness;
  j["metrics"] = metrics;
  return j;
}

}  // namespace tdp
