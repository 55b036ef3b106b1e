#pragma once

#include <string>
#include <vector>

#include "ccsp/syntax.hpp"
#include "ccsp/trace.hpp"

namespace ccsp {

/// Order-processing transaction: accept the order, then book a courier, pack
/// two items and run a credit check in parallel. A failed credit check throws
/// and the block replays the compensations of everything already done.
/// Reconstructed from a prose description; it is a demo, not a reference model.
inline constexpr const char* kWarehouseTerm =
    "[ (AcceptOrder % RestockOrder) ; ( (BookCourier % CancelCourier) || (PackItem1 % UnpackItem1) || "
    "(PackItem2 % UnpackItem2) || (CreditCheck % SKIP ; (Ok % SKIP [] NotOk % SKIP ; THROWW)) ) ]";

struct WarehouseCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first offending trace, empty when passed
};

struct WarehouseReport {
  StdTerm term;
  TraceSet traces;
  bool semantics_agree = true;
  std::vector<WarehouseCheck> checks;

  bool ok() const noexcept;
};

/// Evaluates the bundled term with both semantics and checks that
/// (a) every trace ends with success, (b) after NotOk every performed forward
/// action is later compensated, (c) compensations of sequential steps run in
/// reverse order, and (d) the all-success traces contain no compensation.
WarehouseReport warehouse_example();

}  // namespace ccsp
