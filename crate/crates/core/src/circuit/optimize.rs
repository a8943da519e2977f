// zxopt - quantum circuit optimisation by search over ZX-calculus
//         congruences
// Copyright (C) 2026 - The zxopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Peephole cleanup: phase fusion, cancellation of self-inverse pairs and
//! removal of zero phases, looking back through commuting gates, plus
//! Hadamard conjugation and pushing.

use super::{Circuit, Gate};

/// Simplify a circuit to a fixpoint of the peephole rules. The result is
/// equal to the input up to global phase and never has a larger
/// [`complexity`](super::complexity).
pub fn basic_optimize(c: &Circuit) -> Circuit {
    let mut best = peephole(c.gates().to_vec());
    loop {
        let next = peephole(push_hadamards(&best, c.n_qubits()));
        if cost(&next) >= cost(&best) {
            return Circuit::from_parts_unchecked(c.n_qubits(), best);
        }
        best = next;
    }
}

fn cost(gates: &[Gate]) -> usize {
    gates
        .iter()
        .map(|g| if g.is_two_qubit() { 10 } else { 1 })
        .sum()
}

fn peephole(mut gates: Vec<Gate>) -> Vec<Gate> {
    loop {
        let next = pass(&gates);
        if next == gates {
            return next;
        }
        gates = next;
    }
}

/// Defer every Hadamard as late as possible, conjugating the gates it moves
/// past, and emit it only when the conjugate is not a basic gate.
fn push_hadamards(gates: &[Gate], n: usize) -> Vec<Gate> {
    use Gate::*;
    let mut pending = vec![false; n];
    let mut out = Vec::with_capacity(gates.len());
    let flush = |q: usize, pending: &mut Vec<bool>, out: &mut Vec<Gate>| {
        if pending[q] {
            out.push(H(q));
            pending[q] = false;
        }
    };
    for &g in gates {
        match g {
            H(q) => pending[q] = !pending[q],
            ZPhase(q, a) if pending[q] => out.push(XPhase(q, a)),
            XPhase(q, a) if pending[q] => out.push(ZPhase(q, a)),
            ZPhase(..) | XPhase(..) => out.push(g),
            Cnot { control, target } => match (pending[control], pending[target]) {
                (true, true) => out.push(Cnot {
                    control: target,
                    target: control,
                }),
                (false, true) => out.push(Cz(control, target)),
                (true, false) => {
                    flush(control, &mut pending, &mut out);
                    out.push(g);
                }
                (false, false) => out.push(g),
            },
            Cz(a, b) => {
                if pending[a] && pending[b] {
                    flush(a, &mut pending, &mut out);
                }
                match (pending[a], pending[b]) {
                    (true, _) => out.push(Cnot {
                        control: b,
                        target: a,
                    }),
                    (_, true) => out.push(Cnot {
                        control: a,
                        target: b,
                    }),
                    _ => out.push(g),
                }
            }
        }
    }
    for q in 0..n {
        flush(q, &mut pending, &mut out);
    }
    out
}

fn pass(gates: &[Gate]) -> Vec<Gate> {
    let mut out: Vec<Gate> = Vec::with_capacity(gates.len());
    'gates: for &g in gates {
        if g.phase().is_some_and(|p| p.is_zero()) {
            continue;
        }
        if let Gate::H(q) = g {
            if conjugate(&mut out, q) {
                continue;
            }
        }
        for j in (0..out.len()).rev() {
            match merge(out[j], g) {
                Merge::Cancel => {
                    out.remove(j);
                    continue 'gates;
                }
                Merge::Into(m) => {
                    if m.phase().is_some_and(|p| p.is_zero()) {
                        out.remove(j);
                    } else {
                        out[j] = m;
                    }
                    continue 'gates;
                }
                Merge::No if commutes(out[j], g) => {}
                Merge::No => break,
            }
        }
        out.push(g);
    }
    out
}

/// Absorb a Hadamard pair `H(q) G H(q)`, with `H(q)` arriving last, into
/// the gate `G` between them when the conjugate is another basic gate.
fn conjugate(out: &mut Vec<Gate>, q: usize) -> bool {
    use Gate::*;
    let mut on_q = (0..out.len()).rev().filter(|&k| out[k].acts_on(q));
    let (Some(j), Some(i)) = (on_q.next(), on_q.next()) else {
        return false;
    };
    if out[i] != H(q) {
        return false;
    }
    let swapped = match out[j] {
        ZPhase(p, a) => XPhase(p, a),
        XPhase(p, a) => ZPhase(p, a),
        Cz(a, b) => Cnot {
            control: if a == q { b } else { a },
            target: q,
        },
        Cnot { control, target } if target == q => Cz(control, target),
        _ => return false,
    };
    out[j] = swapped;
    out.remove(i);
    true
}

enum Merge {
    No,
    Cancel,
    Into(Gate),
}

fn merge(a: Gate, b: Gate) -> Merge {
    use Gate::*;
    match (a, b) {
        (ZPhase(p, x), ZPhase(q, y)) if p == q => Merge::Into(ZPhase(p, x + y)),
        (XPhase(p, x), XPhase(q, y)) if p == q => Merge::Into(XPhase(p, x + y)),
        (H(p), H(q)) if p == q => Merge::Cancel,
        (Cnot { .. }, Cnot { .. }) if a == b => Merge::Cancel,
        (Cz(a0, a1), Cz(b0, b1)) if (a0, a1) == (b0, b1) || (a0, a1) == (b1, b0) => Merge::Cancel,
        _ => Merge::No,
    }
}

fn commutes(a: Gate, b: Gate) -> bool {
    use Gate::*;
    let (qa, qb) = (a.qubits(), b.qubits());
    if !qa.iter().any(|q| qb.contains(q)) {
        return true;
    }
    let diagonal = |g: Gate| matches!(g, ZPhase(..) | Cz(..));
    match (a, b) {
        _ if diagonal(a) && diagonal(b) => true,
        (ZPhase(q, _), Cnot { target, .. }) | (Cnot { target, .. }, ZPhase(q, _)) => q != target,
        (Cz(x, y), Cnot { target, .. }) | (Cnot { target, .. }, Cz(x, y)) => {
            target != x && target != y
        }
        (XPhase(q, _), Cnot { control, .. }) | (Cnot { control, .. }, XPhase(q, _)) => q != control,
        (XPhase(p, _), XPhase(q, _)) => p == q,
        (
            Cnot {
                control: c1,
                target: t1,
            },
            Cnot {
                control: c2,
                target: t2,
            },
        ) => c1 != t2 && t1 != c2,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{complexity, random_circuit, CircuitParams};
    use crate::oracle::{equal_up_to_scalar, evaluate_circuit};
    use crate::phase::Phase;
    use proptest::prelude::*;

    fn circ(n: usize, gates: Vec<Gate>) -> Circuit {
        Circuit::from_gates(n, gates).unwrap()
    }

    #[test]
    fn cancels_h_pair() {
        assert!(basic_optimize(&circ(1, vec![Gate::H(0), Gate::H(0)])).is_empty());
    }

    #[test]
    fn fuses_phases() {
        let t = Gate::ZPhase(0, Phase::new(1, 4));
        assert_eq!(
            basic_optimize(&circ(1, vec![t, t])).gates(),
            &[Gate::ZPhase(0, Phase::new(1, 2))]
        );
    }

    #[test]
    fn cancels_cnot_pair() {
        let cx = Gate::Cnot {
            control: 0,
            target: 1,
        };
        assert!(basic_optimize(&circ(2, vec![cx, cx])).is_empty());
    }

    #[test]
    fn phase_through_control() {
        let t = Gate::ZPhase(0, Phase::new(1, 4));
        let cx = Gate::Cnot {
            control: 0,
            target: 1,
        };
        assert_eq!(
            basic_optimize(&circ(2, vec![t, cx, t])).gates(),
            &[Gate::ZPhase(0, Phase::new(1, 2)), cx]
        );
        // but not through the target
        let t1 = Gate::ZPhase(1, Phase::new(1, 4));
        assert_eq!(basic_optimize(&circ(2, vec![t1, cx, t1])).len(), 3);
    }

    #[test]
    fn cascading_cancellation() {
        let cx = Gate::Cnot {
            control: 0,
            target: 1,
        };
        let s = Gate::ZPhase(0, Phase::new(1, 2));
        let sdg = Gate::ZPhase(0, Phase::new(3, 2));
        let c = circ(
            2,
            vec![
                cx,
                Gate::H(1),
                s,
                sdg,
                Gate::H(1),
                cx,
                Gate::Cz(1, 0),
                Gate::Cz(0, 1),
            ],
        );
        assert!(basic_optimize(&c).is_empty());
    }

    #[test]
    fn hadamard_conjugation() {
        let cz = Gate::Cz(0, 1);
        assert_eq!(
            basic_optimize(&circ(2, vec![Gate::H(1), cz, Gate::H(1)])).gates(),
            &[Gate::Cnot {
                control: 0,
                target: 1
            }]
        );
        let t = Gate::ZPhase(0, Phase::new(1, 4));
        assert_eq!(
            basic_optimize(&circ(1, vec![Gate::H(0), t, Gate::H(0)])).gates(),
            &[Gate::XPhase(0, Phase::new(1, 4))]
        );
    }

    #[test]
    fn hadamards_reverse_cnot() {
        let c = circ(
            2,
            vec![
                Gate::H(0),
                Gate::H(1),
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
                Gate::H(0),
                Gate::H(1),
            ],
        );
        assert_eq!(
            basic_optimize(&c).gates(),
            &[Gate::Cnot {
                control: 1,
                target: 0
            }]
        );
    }

    #[test]
    fn drops_zero_phase() {
        assert!(basic_optimize(&circ(1, vec![Gate::ZPhase(0, Phase::zero())])).is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn sound_idempotent_monotone(seed in 0u64..10_000, n in 2usize..6, len in 0usize..50) {
            let c = random_circuit(&CircuitParams::new(n, len), seed).unwrap();
            let o = basic_optimize(&c);
            prop_assert!(complexity(&o).comp <= complexity(&c).comp);
            prop_assert_eq!(basic_optimize(&o), o.clone());
            let (a, b) = (evaluate_circuit(&c).unwrap(), evaluate_circuit(&o).unwrap());
            prop_assert!(equal_up_to_scalar(&a, &b, 1e-8).unwrap());
        }

        #[test]
        fn sound_on_mixed_gates(
            gates in prop::collection::vec(
                (0usize..6, 0usize..3, 1usize..3, -3i64..4)
                    .prop_map(|(k, q, d, ph)| match k {
                        0 => Gate::H(q),
                        1 => Gate::ZPhase(q, Phase::new(ph, 4)),
                        2 => Gate::XPhase(q, Phase::new(ph, 2)),
                        3 => Gate::Cnot { control: q, target: (q + d) % 3 },
                        4 => Gate::Cnot { control: (q + d) % 3, target: q },
                        _ => Gate::Cz(q, (q + d) % 3),
                    }),
                0..40,
            )
        ) {
            let c = circ(3, gates);
            let o = basic_optimize(&c);
            let (a, b) = (evaluate_circuit(&c).unwrap(), evaluate_circuit(&o).unwrap());
            prop_assert!(equal_up_to_scalar(&a, &b, 1e-8).unwrap());
        }
    }
}
