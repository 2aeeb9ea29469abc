#include "kribbon/builder.hpp"

#include <string>

namespace kribbon {

int DiagramBuilder::add_crossing(int sign) {
  if (sign != 1 && sign != -1) throw DiagramError("crossing sign must be +1 or -1");
  nodes_.push_back(Node{sign, false, {}, {}});
  return static_cast<int>(nodes_.size()) - 1;
}

int DiagramBuilder::add_joint() {
  nodes_.push_back(Node{1, true, {}, {}});
  return static_cast<int>(nodes_.size()) - 1;
}

void DiagramBuilder::connect(Port from, Port to) {
  auto& a = nodes_.at(static_cast<size_t>(from.node));
  auto& b = nodes_.at(static_cast<size_t>(to.node));
  bool from_out = from.role == Role::UnderOut || from.role == Role::OverOut;
  bool to_in = to.role == Role::UnderIn || to.role == Role::OverIn;
  if (!from_out || !to_in) throw DiagramError("builder: connect must go from an out-port to an in-port");
  if (a.joint && from.role != Role::UnderOut) throw DiagramError("builder: joint has a single out-port");
  if (b.joint && to.role != Role::UnderIn) throw DiagramError("builder: joint has a single in-port");
  int pf = port_index(from.role), pt = port_index(to.role);
  if (a.linked[static_cast<size_t>(pf)] || b.linked[static_cast<size_t>(pt)])
    throw DiagramError("builder: port connected twice");
  a.link[static_cast<size_t>(pf)] = to;
  a.linked[static_cast<size_t>(pf)] = true;
  b.link[static_cast<size_t>(pt)] = from;
  b.linked[static_cast<size_t>(pt)] = true;
}

LinkDiagram DiagramBuilder::build(std::vector<int>* origin) const {
  std::vector<int> index(nodes_.size(), -1);
  int n = 0;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const auto& nd = nodes_[i];
    auto need = [&](Role r) {
      if (!nd.linked[static_cast<size_t>(port_index(r))])
        throw DiagramError("builder: unconnected port on node " + std::to_string(i));
    };
    need(Role::UnderIn);
    need(Role::UnderOut);
    if (!nd.joint) {
      need(Role::OverIn);
      need(Role::OverOut);
      index[i] = n++;
    }
  }
  if (origin) {
    origin->assign(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < nodes_.size(); ++i)
      if (index[i] >= 0) (*origin)[static_cast<size_t>(index[i])] = static_cast<int>(i);
  }

  std::vector<Crossing> xs(static_cast<size_t>(n));
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (index[i] >= 0) xs[static_cast<size_t>(index[i])].sign = nodes_[i].sign;

  std::vector<char> joint_seen(nodes_.size(), 0);
  int arc = 0;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (index[i] < 0) continue;
    for (Role r : {Role::UnderOut, Role::OverOut}) {
      Port p = nodes_[i].link[static_cast<size_t>(port_index(r))];
      while (nodes_[static_cast<size_t>(p.node)].joint) {
        joint_seen[static_cast<size_t>(p.node)] = 1;
        p = nodes_[static_cast<size_t>(p.node)].link[static_cast<size_t>(port_index(Role::UnderOut))];
      }
      auto& src = xs[static_cast<size_t>(index[i])];
      src.arcs[static_cast<size_t>(slot_of(r, src.sign))] = arc;
      auto& dst = xs[static_cast<size_t>(index[static_cast<size_t>(p.node)])];
      dst.arcs[static_cast<size_t>(slot_of(p.role, dst.sign))] = arc;
      ++arc;
    }
  }

  int loops = free_loops_;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].joint || joint_seen[i]) continue;
    size_t j = i;
    while (!joint_seen[j]) {
      joint_seen[j] = 1;
      Port p = nodes_[j].link[static_cast<size_t>(port_index(Role::UnderOut))];
      j = static_cast<size_t>(p.node);
    }
    ++loops;
  }
  return LinkDiagram(std::move(xs), loops);
}

}  // namespace kribbon
