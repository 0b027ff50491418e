#include "rectcut/netlist_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace rectcut {
namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

// Scalars may contain spaces ("1 + sqrt(2)"), so everything after the fixed
// fields is the scalar.
std::string tail_after(const std::string& line, std::size_t fields) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < fields; ++i) {
    pos = line.find_first_not_of(" \t", pos);
    pos = line.find_first_of(" \t", pos);
    if (pos == std::string::npos) return {};
  }
  const std::size_t start = line.find_first_not_of(" \t", pos);
  return start == std::string::npos ? std::string() : line.substr(start);
}

}  // namespace

template <class K>
Netlist<K> parse_netlist(std::string_view text, const FieldDescriptor& field) {
  Netlist<K> net;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = raw.substr(0, raw.find('#'));
    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    try {
      if (words[0] == "N") {
        if (words.size() != 2) throw ParseError("expected N <name>");
        net.add_node(words[1]);
      } else if (words[0] == "R") {
        const std::string value = tail_after(line, 4);
        if (words.size() < 5 || value.empty()) throw ParseError("expected R <id> <node_a> <node_b> <value>");
        net.add_resistor(words[1], words[2], words[3], parse_scalar<K>(value, field));
      } else if (words[0] == "V") {
        const std::string value = tail_after(line, 3);
        if (words.size() < 4 || value.empty()) throw ParseError("expected V <plus> <minus> <value>");
        net.set_battery(words[1], words[2], parse_scalar<K>(value, field));
      } else {
        throw ParseError("unknown record \"" + words[0] + "\"");
      }
    } catch (const Error& e) {
      throw ParseError(where + e.what());
    }
  }
  if (!net.has_battery()) throw ParseError("netlist has no V line");
  return net;
}

template Netlist<Rational> parse_netlist<Rational>(std::string_view, const FieldDescriptor&);
template Netlist<QuadExt> parse_netlist<QuadExt>(std::string_view, const FieldDescriptor&);
template Netlist<RatFunc> parse_netlist<RatFunc>(std::string_view, const FieldDescriptor&);

AnyNetlist parse_any_netlist(std::string_view text, bool symbolic) {
  if (symbolic) return parse_netlist<RatFunc>(text, FieldDescriptor::rational());
  if (auto d = find_radicand(text)) return parse_netlist<QuadExt>(text, FieldDescriptor::quadratic(*d));
  return parse_netlist<Rational>(text, FieldDescriptor::rational());
}

AnyNetlist load_netlist(const std::string& path, bool symbolic) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_any_netlist(buf.str(), symbolic);
}

template <class K>
std::string format_netlist(const Netlist<K>& net) {
  std::ostringstream os;
  for (const std::string& name : net.nodes()) os << "N " << name << "\n";
  for (const Resistor<K>& r : net.resistors()) {
    os << "R " << r.id << " " << net.nodes()[r.a] << " " << net.nodes()[r.b] << " " << format_scalar(r.r) << "\n";
  }
  if (net.has_battery()) {
    const Battery<K>& b = net.battery();
    os << "V " << net.nodes()[b.plus] << " " << net.nodes()[b.minus] << " " << format_scalar(b.U) << "\n";
  }
  return os.str();
}

template std::string format_netlist<Rational>(const Netlist<Rational>&);
template std::string format_netlist<QuadExt>(const Netlist<QuadExt>&);
template std::string format_netlist<RatFunc>(const Netlist<RatFunc>&);

}  // namespace rectcut
