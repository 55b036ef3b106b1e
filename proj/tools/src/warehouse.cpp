#include "ccsp/warehouse.hpp"

#include <algorithm>
#include <optional>

#include "ccsp/equivalence.hpp"
#include "ccsp/parser.hpp"

namespace ccsp {

namespace {

struct Activity {
  const char* forward;
  const char* compensation;
  int stage;  // position in the sequential composition
};

constexpr Activity kActivities[] = {
    {"AcceptOrder", "RestockOrder", 0}, {"BookCourier", "CancelCourier", 1},
    {"PackItem1", "UnpackItem1", 1},    {"PackItem2", "UnpackItem2", 1},
};

std::optional<std::size_t> position(const Trace& t, std::string_view name) {
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    if (t.events[i].name() == name) return i;
  }
  return std::nullopt;
}

bool contains(const Trace& t, std::string_view name) { return position(t, name).has_value(); }

template <typename Pred>
WarehouseCheck check_all(std::string name, const TraceSet& traces, Pred holds) {
  WarehouseCheck check{std::move(name), true, {}};
  for (const auto& t : traces) {
    if (!holds(t)) {
      check.passed = false;
      check.detail = format_trace(t);
      break;
    }
  }
  return check;
}

}  // namespace

bool WarehouseReport::ok() const noexcept {
  return semantics_agree && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

WarehouseReport warehouse_example() {
  auto term = parse_standard(kWarehouseTerm);
  auto verdict = check_standard(term);
  WarehouseReport report{term, verdict.denotational, verdict.equal(), {}};

  report.checks.push_back(check_all("every trace ends with success", report.traces,
                                    [](const Trace& t) { return t.terminal == Terminal::Tick; }));

  report.checks.push_back(check_all("after NotOk each forward action is later compensated", report.traces,
                                    [](const Trace& t) {
                                      if (!contains(t, "NotOk")) return true;
                                      for (const auto& a : kActivities) {
                                        auto f = position(t, a.forward);
                                        if (!f) continue;
                                        auto c = position(t, a.compensation);
                                        if (!c || *c < *f) return false;
                                      }
                                      return true;
                                    }));

  report.checks.push_back(check_all("compensations of sequential steps run in reverse order", report.traces,
                                    [](const Trace& t) {
                                      for (const auto& x : kActivities) {
                                        for (const auto& y : kActivities) {
                                          if (x.stage >= y.stage) continue;
                                          auto cx = position(t, x.compensation);
                                          auto cy = position(t, y.compensation);
                                          if (cx && cy && *cx < *cy) return false;
                                        }
                                      }
                                      return true;
                                    }));

  report.checks.push_back(check_all("successful orders run no compensation", report.traces, [](const Trace& t) {
    if (contains(t, "NotOk")) return true;
    return std::none_of(std::begin(kActivities), std::end(kActivities),
                        [&](const Activity& a) { return contains(t, a.compensation); });
  }));

  return report;
}

}  // namespace ccsp
