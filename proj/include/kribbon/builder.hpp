#pragma once

#include <vector>

#include "kribbon/diagram.hpp"

namespace kribbon {

// Assembles a diagram from crossings with named strand ports.  Joints are
// two-port pass-through nodes that disappear at build time; a cycle made only
// of joints becomes a free loop.
class DiagramBuilder {
 public:
  struct Port {
    int node = -1;
    Role role = Role::UnderIn;  // joints use UnderIn / UnderOut
  };

  int add_crossing(int sign);
  int add_joint();
  void add_free_loop() { ++free_loops_; }

  static Port ui(int n) { return {n, Role::UnderIn}; }
  static Port uo(int n) { return {n, Role::UnderOut}; }
  static Port oi(int n) { return {n, Role::OverIn}; }
  static Port oo(int n) { return {n, Role::OverOut}; }
  static Port in(int joint) { return {joint, Role::UnderIn}; }
  static Port out(int joint) { return {joint, Role::UnderOut}; }

  // `from` must be an outgoing port, `to` an incoming one.
  void connect(Port from, Port to);

  int sign(int node) const { return nodes_[static_cast<size_t>(node)].sign; }
  bool is_joint(int node) const { return nodes_[static_cast<size_t>(node)].joint; }

  // origin[i] receives the builder node of output crossing i.
  LinkDiagram build(std::vector<int>* origin = nullptr) const;

 private:
  struct Node {
    int sign = 1;
    bool joint = false;
    // successor of each outgoing port, predecessor of each incoming port
    std::array<Port, 4> link{};
    std::array<bool, 4> linked{};
  };
  static int port_index(Role r) { return static_cast<int>(r); }

  std::vector<Node> nodes_;
  int free_loops_ = 0;
};

}  // namespace kribbon
