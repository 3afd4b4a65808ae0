// Copyright 2026 The dephase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <json.hpp>

#include "core/pulse.hpp"

namespace dephase {

using nlohmann::json;

std::string schedule_to_json(const PulseSchedule& sched) {
  json doc;
  doc["J"] = sched.system().j();
  doc["total_time"] = sched.total_time();
  json events = json::array();
  for (const auto& e : sched.events()) {
    events.push_back({{"time", e.time},
                      {"target", static_cast<int>(e.target)},
                      {"axis", axis_name(e.axis)},
                      {"angle", e.angle}});
  }
  doc["events"] = std::move(events);
  return doc.dump(2);
}

namespace {

double number_at(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number())
    fail(Errc::invalid_argument, where + "/" + key + ": expected a number");
  return it->get<double>();
}

}  // namespace

PulseSchedule schedule_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::invalid_argument, std::string("schedule document: ") + e.what());
  }
  if (!doc.is_object()) fail(Errc::invalid_argument, "schedule document: expected an object");
  const double j = number_at(doc, "J", "");
  const double total = number_at(doc, "total_time", "");
  const auto ev = doc.find("events");
  if (ev == doc.end() || !ev->is_array()) fail(Errc::invalid_argument, "/events: expected an array");

  std::vector<PulseEvent> events;
  for (std::size_t k = 0; k < ev->size(); ++k) {
    const json& item = (*ev)[k];
    const std::string where = "/events/" + std::to_string(k);
    if (!item.is_object()) fail(Errc::invalid_argument, where + ": expected an object");
    PulseEvent e{};
    e.time = number_at(item, "time", where);
    e.angle = number_at(item, "angle", where);
    const auto target = item.find("target");
    if (target == item.end() || !target->is_number_integer() ||
        (target->get<int>() != 1 && target->get<int>() != 2))
      fail(Errc::invalid_argument, where + "/target: expected 1 or 2");
    e.target = static_cast<Qubit>(target->get<int>());
    const auto axis = item.find("axis");
    if (axis == item.end() || !axis->is_string()) fail(Errc::invalid_argument, where + "/axis: expected a string");
    try {
      e.axis = parse_axis(axis->get<std::string>());
    } catch (const Error& err) {
      fail(Errc::invalid_argument, where + "/axis: " + err.what());
    }
    events.push_back(e);
  }
  return PulseSchedule(CouplingSystem(j), std::move(events), total);
}

}  // namespace dephase
