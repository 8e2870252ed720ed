#include "glens/dynamics.hpp"

namespace glens {

void validate_machine(const MooreMachine& m) {
  if (m.states < 0 || m.inputs < 0 || m.outputs < 0)
    throw MalformedData("negative machine sizes");
  validate_fn(m.readout);
  validate_fn(m.update);
  if (m.readout.dom != m.states || m.readout.cod != m.outputs)
    throw MalformedData("readout is not a map states -> outputs");
  if (m.update.dom != m.inputs * m.states || m.update.cod != m.states)
    throw MalformedData("update is not a map inputs*states -> states");
}

ClassicLens machine_to_lens(const MooreMachine& m) {
  validate_machine(m);
  return {m.readout, compose(symmetry(m.states, m.inputs), m.update)};
}

MooreMachine lens_to_machine(const ClassicLens& l, int inputs) {
  validate_fn(l.get);
  validate_fn(l.put);
  if (inputs < 0) throw MalformedData("negative input size");
  MooreMachine m;
  m.states = l.get.dom;
  m.inputs = inputs;
  m.outputs = l.get.cod;
  if (l.put.dom != m.states * inputs || l.put.cod != m.states)
    throw InterfaceMismatch("update table is not states*inputs -> states");
  m.readout = l.get;
  m.update = compose(symmetry(inputs, m.states), l.put);
  return m;
}

std::pair<int, int> step(const MooreMachine& m, int state, int input) {
  validate_machine(m);
  if (state < 0 || state >= m.states)
    throw IndexOutOfRange("state " + std::to_string(state) + " out of range");
  if (input < 0 || input >= m.inputs)
    throw IndexOutOfRange("input " + std::to_string(input) + " out of range");
  return {m.readout.table[state],
          m.update.table[pair_index(m.states, input, state)]};
}

Trace run(const MooreMachine& m, int initial, const std::vector<int>& inputs) {
  validate_machine(m);
  if (initial < 0 || initial >= m.states)
    throw IndexOutOfRange("initial state " + std::to_string(initial) +
                          " out of range");
  Trace t;
  t.initial = initial;
  t.inputs = inputs;
  int s = initial;
  for (int a : inputs) {
    auto [out, next] = step(m, s, a);
    t.outputs.push_back(out);
    s = next;
  }
  t.outputs.push_back(m.readout.table[s]);
  t.final = s;
  return t;
}

Trace run_via_lens(const MooreMachine& m, int initial,
                   const std::vector<int>& inputs) {
  validate_machine(m);
  if (initial < 0 || initial >= m.states)
    throw IndexOutOfRange("initial state " + std::to_string(initial) +
                          " out of range");
  ClassicLens behavior = machine_to_lens(m);
  Trace t;
  t.initial = initial;
  t.inputs = inputs;
  int s = initial;
  for (int a : inputs) {
    if (a < 0 || a >= m.inputs)
      throw IndexOutOfRange("input " + std::to_string(a) + " out of range");
    // a state is a lens from the trivial interface; stepping is composition
    ClassicLens point{constant_fn(1, m.states, s), identity_fn(m.states)};
    ClassicLens probe = compose_classic(point, behavior);
    t.outputs.push_back(probe.get.table[0]);
    s = probe.put.table[a];
  }
  ClassicLens point{constant_fn(1, m.states, s), identity_fn(m.states)};
  ClassicLens probe = compose_classic(point, behavior);
  t.outputs.push_back(probe.get.table[0]);
  t.final = s;
  return t;
}

MooreMachine tensor_machines(const MooreMachine& m1, const MooreMachine& m2) {
  validate_machine(m1);
  validate_machine(m2);
  MooreMachine m;
  m.states = m1.states * m2.states;
  m.inputs = m1.inputs * m2.inputs;
  m.outputs = m1.outputs * m2.outputs;
  m.readout = product_fn(m1.readout, m2.readout);
  m.update = compose(middle_interchange(m1.inputs, m2.inputs, m1.states,
                                        m2.states),
                     product_fn(m1.update, m2.update));
  return m;
}

MooreMachine wire(const MooreMachine& m, const ClassicLens& w,
                  int new_inputs) {
  validate_machine(m);
  validate_fn(w.get);
  validate_fn(w.put);
  if (w.get.dom != m.outputs)
    throw InterfaceMismatch("wiring sights " + std::to_string(w.get.dom) +
                            " outputs, machine has " +
                            std::to_string(m.outputs));
  if (w.put.cod != m.inputs)
    throw InterfaceMismatch("wiring feeds " + std::to_string(w.put.cod) +
                            " inputs, machine takes " +
                            std::to_string(m.inputs));
  if (new_inputs < 0) {
    if (m.outputs > 0 && w.put.dom % m.outputs != 0)
      throw InterfaceMismatch("wiring update source is not a multiple of the "
                              "machine's output count");
    new_inputs = m.outputs > 0 ? w.put.dom / m.outputs : 0;
  }
  if (w.put.dom != m.outputs * new_inputs)
    throw InterfaceMismatch("wiring update source does not match the new "
                            "input count");
  return lens_to_machine(compose_classic(machine_to_lens(m), w), new_inputs);
}

}  // namespace glens
