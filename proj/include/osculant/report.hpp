#pragma once

// Certification reports: a list of named checks, each with its outcome, the
// outcome predicted from the field, a witness and counts. The canonical JSON
// body is deterministic; wall-clock timings are kept apart from it.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "osculant/field.hpp"
#include "osculant/projspace.hpp"

namespace osculant {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

struct Check {
  std::string name;
  std::string anchor;  // the statement the check certifies
  CheckStatus status = CheckStatus::Skipped;
  // Expected outcome; nullopt means the check is informational and can
  // never count as a violation.
  std::optional<CheckStatus> predicted;
  Json witness;  // null when there is none
  Json counts = Json::object();
  std::string reason;  // why a check was skipped
  double millis = 0;

  bool violates() const {
    return status != CheckStatus::Skipped && predicted && *predicted != CheckStatus::Skipped && status != *predicted;
  }
};

struct Report {
  std::string command;
  std::string field;
  std::optional<std::string> regime;
  Json parameters = Json::object();
  std::vector<Check> checks;

  bool has_violation() const {
    for (const auto& c : checks) {
      if (c.violates()) return true;
    }
    return false;
  }
};

/// Runs `fn` (which fills in a Check) and records its wall-clock time.
template <class Fn>
Check timed_check(std::string name, std::string anchor, Fn&& fn) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  const auto start = std::chrono::steady_clock::now();
  fn(c);
  c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

inline Check skipped_check(std::string name, std::string anchor, std::string reason) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.status = CheckStatus::Skipped;
  c.predicted = CheckStatus::Skipped;
  c.reason = std::move(reason);
  return c;
}

// ---------------------------------------------------------------------------
// JSON encodings of field elements and geometric objects

inline Json to_json(const Fp& a) { return a.value(); }
inline Json to_json(const Rational& a) { return to_string(a); }

template <class E, std::size_t N>
Json to_json(const std::array<E, N>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

template <class E, std::size_t N, class Tag>
Json to_json(const Homogeneous<E, N, Tag>& h) {
  return to_json(h.coords());
}

template <class E>
Json to_json(const Line<E>& l) {
  return Json{{"points", {to_json(l.first()), to_json(l.second())}}, {"plucker", to_json(l.plucker())}};
}

template <class E>
Json to_json(const std::pair<E, E>& p) {
  return Json::array({to_json(p.first), to_json(p.second)});
}

inline Json to_json(const Check& c, bool with_timing) {
  Json j{{"name", c.name},
         {"paper_anchor", c.anchor},
         {"status", status_name(c.status)},
         {"predicted", c.predicted ? Json(status_name(*c.predicted)) : Json(nullptr)},
         {"witness", c.witness},
         {"counts", c.counts}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  if (with_timing) j["millis"] = c.millis;
  return j;
}

/// The canonical report body. With `with_timing` each check also carries
/// its wall-clock time, which makes the output run-dependent.
inline Json to_json(const Report& r, bool with_timing = false) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c, with_timing));
  return Json{{"schema_version", kSchemaVersion},
              {"tool", {{"name", "osculant"}, {"version", kToolVersion}}},
              {"command", r.command},
              {"field", r.field},
              {"regime", r.regime ? Json(*r.regime) : Json(nullptr)},
              {"parameters", r.parameters},
              {"checks", checks},
              {"verdict", r.has_violation() ? "violation" : "ok"}};
}

/// Pretty-printed with sorted keys (nlohmann objects are ordered maps).
inline std::string render_json(const Report& r, bool with_timing = false) { return to_json(r, with_timing).dump(2) + "\n"; }

/// One line per check for terminal output.
inline std::string render_text(const Report& r) {
  std::string out = r.command + " over " + r.field;
  if (r.regime) out += " (regime " + *r.regime + ")";
  out += "\n";
  for (const auto& c : r.checks) {
    out += "  " + std::string(status_name(c.status));
    out.append(8 - std::string(status_name(c.status)).size(), ' ');
    out += c.name;
    if (c.predicted && c.status != CheckStatus::Skipped && *c.predicted != CheckStatus::Skipped) {
      out += c.violates() ? "  [UNEXPECTED]" : "  [as predicted]";
    }
    if (!c.reason.empty()) out += "  (" + c.reason + ")";
    out += "\n";
  }
  out += r.has_violation() ? "verdict: violation\n" : "verdict: ok\n";
  return out;
}

}  // namespace osculant
