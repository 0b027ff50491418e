#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "rectcut/circuit.hpp"
#include "rectcut/quad_ext.hpp"
#include "rectcut/rat_func.hpp"
#include "rectcut/rational.hpp"
#include "rectcut/scalar_io.hpp"

namespace rectcut {

// Netlist text:
//   N <name>                     optional node declaration
//   R <id> <node_a> <node_b> <scalar>
//   V <node_plus> <node_minus> <scalar>   exactly once
//   # comment
// Errors carry the line number.

template <class K>
Netlist<K> parse_netlist(std::string_view text, const FieldDescriptor& field);

extern template Netlist<Rational> parse_netlist<Rational>(std::string_view, const FieldDescriptor&);
extern template Netlist<QuadExt> parse_netlist<QuadExt>(std::string_view, const FieldDescriptor&);
extern template Netlist<RatFunc> parse_netlist<RatFunc>(std::string_view, const FieldDescriptor&);

using AnyNetlist = std::variant<Netlist<Rational>, Netlist<QuadExt>, Netlist<RatFunc>>;

/// Symbolic mode reads over Q(t); otherwise the field is Q, or Q(sqrt d) when
/// some scalar mentions sqrt(d).
AnyNetlist parse_any_netlist(std::string_view text, bool symbolic);
AnyNetlist load_netlist(const std::string& path, bool symbolic);

template <class K>
std::string format_netlist(const Netlist<K>& net);

extern template std::string format_netlist<Rational>(const Netlist<Rational>&);
extern template std::string format_netlist<QuadExt>(const Netlist<QuadExt>&);
extern template std::string format_netlist<RatFunc>(const Netlist<RatFunc>&);

}  // namespace rectcut
