#pragma once

// Moore machines as lenses from the state interface to the i/o interface,
// stepwise simulation, parallel product, and wiring through a lens.

#include "glens/instances.hpp"

namespace glens {

struct MooreMachine {
  int states = 0;
  int inputs = 0;
  int outputs = 0;
  FinFn readout;  // states -> outputs
  FinFn update;   // inputs*states -> states
  bool operator==(const MooreMachine&) const = default;
};

void validate_machine(const MooreMachine& m);

// The machine's lens has source pair (states, states) and target pair
// (outputs, inputs): sight with the readout, update by feeding the input
// after the state.
ClassicLens machine_to_lens(const MooreMachine& m);
MooreMachine lens_to_machine(const ClassicLens& l, int inputs);

// One step: the output at the current state and the successor state.
std::pair<int, int> step(const MooreMachine& m, int state, int input);

struct Trace {
  int initial = 0;
  std::vector<int> inputs;
  std::vector<int> outputs;  // one per visited state, including the last
  int final = 0;
  bool operator==(const Trace&) const = default;
};

Trace run(const MooreMachine& m, int initial, const std::vector<int>& inputs);

// Same trace computed only through lens composition: the state is carried
// by a point lens that is re-composed with the machine lens at every step.
Trace run_via_lens(const MooreMachine& m, int initial,
                   const std::vector<int>& inputs);

// Parallel product: pairs of states, inputs and outputs, componentwise.
MooreMachine tensor_machines(const MooreMachine& m1, const MooreMachine& m2);

// Post-compose the machine's lens with a wiring lens from the machine's
// interface to a new one, yielding a machine on the same states.  The new
// interface's input arity is w.put.dom / m.outputs; a machine with no
// outputs erases it from the tables (w.put.dom == 0), so it can be passed
// explicitly (-1 = recover, 0 when irrecoverable).
MooreMachine wire(const MooreMachine& m, const ClassicLens& w,
                  int new_inputs = -1);

}  // namespace glens
