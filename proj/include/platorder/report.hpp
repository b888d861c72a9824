#ifndef PLATORDER_REPORT_HPP
#define PLATORDER_REPORT_HPP

#include <string>

#include "platorder/explorer.hpp"

namespace platorder {

// Bit-stable JSON reports: fixed key order, braid words in the universal
// text format, identical invocations give byte-identical output.
std::string signature_report(const PlatSignature& sig);
std::string cell_report(const CosetCell& cell);
std::string order_report(const OrderReport& report);
std::string canplat_report(const CanPlatReport& report);

}  // namespace platorder

#endif
