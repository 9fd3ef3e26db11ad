#include "gridmono/partition_value.hpp"

namespace gridmono {

std::string to_string(Method m) {
    switch (m) {
        case Method::Det: return "det";
        case Method::Formula: return "formula";
        case Method::Enumeration: return "enumeration";
        case Method::Pfaffian: return "pfaffian";
    }
    return "?";
}

}  // namespace gridmono
