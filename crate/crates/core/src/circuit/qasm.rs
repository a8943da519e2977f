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

//! Reading and writing the QASM subset used for circuit files.

use super::{Circuit, CircuitError, Gate};
use crate::phase::Phase;
use std::fmt::Write;

/// Parse a circuit file. Accepts an optional `OPENQASM 2.0;` header and
/// `include` lines, exactly one `qreg`, and the gate set of [`emit_circuit`]
/// plus `rx(...)`.
pub fn parse_circuit(text: &str) -> Result<Circuit, CircuitError> {
    let mut reg: Option<(String, usize)> = None;
    let mut gates = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let code = match raw.find("//") {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let code = code.trim();
        if code.is_empty() {
            continue;
        }
        let syntax = |msg: &str| CircuitError::Syntax {
            line,
            msg: msg.to_string(),
        };
        let stmt = code
            .strip_suffix(';')
            .ok_or_else(|| syntax("missing `;`"))?
            .trim();
        if stmt.contains(';') {
            return Err(syntax("one statement per line"));
        }

        if stmt.starts_with("OPENQASM") || stmt.starts_with("include") {
            continue;
        }
        if let Some(rest) = stmt.strip_prefix("qreg") {
            if reg.is_some() {
                return Err(syntax("only one qreg is supported"));
            }
            let (name, size) = parse_operand(rest.trim()).ok_or_else(|| syntax("bad qreg"))?;
            if size == 0 {
                return Err(syntax("empty register"));
            }
            reg = Some((name, size));
            continue;
        }

        let (rname, size) = reg
            .as_ref()
            .ok_or_else(|| syntax("gate before qreg declaration"))?;

        // split `name(args) operands`
        let paren = stmt
            .find('(')
            .filter(|&p| stmt.find('[').is_none_or(|b| p < b));
        let split = match paren {
            Some(_) => stmt.find(')').map(|p| p + 1),
            None => stmt.find(char::is_whitespace),
        }
        .ok_or_else(|| syntax("expected operands"))?;
        let (head, operands) = (stmt[..split].trim(), stmt[split..].trim());
        let (name, arg) = match head.find('(') {
            Some(pos) => {
                let inner = head[pos + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| syntax("unbalanced parenthesis"))?;
                (head[..pos].trim(), Some(inner.trim()))
            }
            None => (head, None),
        };

        let mut qubits = Vec::new();
        for op in operands.split(',') {
            let (n, q) = parse_operand(op.trim()).ok_or_else(|| syntax("bad operand"))?;
            if &n != rname {
                return Err(syntax(&format!("unknown register `{}`", n)));
            }
            if q >= *size {
                return Err(CircuitError::QubitOutOfRange {
                    line,
                    qubit: q,
                    size: *size,
                });
            }
            qubits.push(q);
        }

        let arity = match name {
            "cx" | "cz" => 2,
            _ => 1,
        };
        if qubits.len() != arity {
            return Err(syntax(&format!("`{}` takes {} operand(s)", name, arity)));
        }
        if arity == 2 && qubits[0] == qubits[1] {
            return Err(syntax("two-qubit gate on a single qubit"));
        }
        let needs_arg = matches!(name, "rz" | "rx");
        if needs_arg != arg.is_some() {
            return Err(syntax("unexpected or missing gate parameter"));
        }
        let phase = || parse_phase(arg.unwrap_or("")).ok_or_else(|| syntax("bad phase"));

        let q = qubits[0];
        let g = match name {
            "h" => Gate::H(q),
            "t" => Gate::ZPhase(q, Phase::new(1, 4)),
            "tdg" => Gate::ZPhase(q, Phase::new(7, 4)),
            "s" => Gate::ZPhase(q, Phase::new(1, 2)),
            "sdg" => Gate::ZPhase(q, Phase::new(3, 2)),
            "z" => Gate::ZPhase(q, Phase::pi()),
            "x" => Gate::XPhase(q, Phase::pi()),
            "rz" => Gate::ZPhase(q, phase()?),
            "rx" => Gate::XPhase(q, phase()?),
            "cx" => Gate::Cnot {
                control: q,
                target: qubits[1],
            },
            "cz" => Gate::Cz(q, qubits[1]),
            _ => {
                return Err(CircuitError::UnknownGate {
                    line,
                    name: name.to_string(),
                })
            }
        };
        gates.push(g);
    }

    let (_, size) = reg.ok_or(CircuitError::Syntax {
        line: text.lines().count().max(1),
        msg: "missing qreg declaration".into(),
    })?;
    Ok(Circuit::from_parts_unchecked(size, gates))
}

/// `name[idx]`
fn parse_operand(s: &str) -> Option<(String, usize)> {
    let open = s.find('[')?;
    let inner = s[open + 1..].strip_suffix(']')?;
    let name = s[..open].trim();
    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return None;
    }
    Some((name.to_string(), inner.trim().parse().ok()?))
}

/// Accepts `0`, `pi`, `-pi`, `k*pi`, `pi/d`, `k*pi/d` and the same with an
/// integer-only form `k` meaning `k*pi` only when `k == 0`.
fn parse_phase(s: &str) -> Option<Phase> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "0" {
        return Some(Phase::zero());
    }
    let (neg, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.as_str()),
    };
    let pos = s.find("pi")?;
    let (num_part, rest) = (&s[..pos], &s[pos + 2..]);
    let num: i64 = if num_part.is_empty() {
        1
    } else {
        num_part.strip_suffix('*')?.parse().ok()?
    };
    let den: i64 = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('/')?.parse().ok()?
    };
    if den <= 0 {
        return None;
    }
    Some(Phase::new(if neg { -num } else { num }, den))
}

fn phase_arg(p: Phase) -> String {
    format!("{}*pi/{}", p.numer(), p.denom())
}

/// Write a circuit in the QASM subset, using the shortest alias for each
/// phase gate.
pub fn emit_circuit(c: &Circuit) -> String {
    let mut out = String::new();
    writeln!(out, "qreg q[{}];", c.n_qubits()).unwrap();
    for g in c.gates() {
        let line = match *g {
            Gate::H(q) => format!("h q[{}];", q),
            Gate::ZPhase(q, p) => {
                let name = match (p.numer(), p.denom()) {
                    (1, 4) => "t".to_string(),
                    (7, 4) => "tdg".to_string(),
                    (1, 2) => "s".to_string(),
                    (3, 2) => "sdg".to_string(),
                    (1, 1) => "z".to_string(),
                    _ => format!("rz({})", phase_arg(p)),
                };
                format!("{} q[{}];", name, q)
            }
            Gate::XPhase(q, p) if p == Phase::pi() => format!("x q[{}];", q),
            Gate::XPhase(q, p) => format!("rx({}) q[{}];", phase_arg(p), q),
            Gate::Cnot { control, target } => format!("cx q[{}],q[{}];", control, target),
            Gate::Cz(a, b) => format!("cz q[{}],q[{}];", a, b),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{random_circuit, CircuitParams};
    use proptest::prelude::*;

    #[test]
    fn empty_program() {
        let c = parse_circuit("qreg q[2];").unwrap();
        assert_eq!(c.n_qubits(), 2);
        assert!(c.is_empty());
    }

    #[test]
    fn single_gates() {
        assert_eq!(
            parse_circuit("qreg q[1];\nh q[0];").unwrap().gates(),
            &[Gate::H(0)]
        );
        assert_eq!(
            parse_circuit("qreg q[2];\ncx q[0],q[1];").unwrap().gates(),
            &[Gate::Cnot {
                control: 0,
                target: 1
            }]
        );
    }

    #[test]
    fn full_grammar() {
        let text = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n// header\nqreg q[3];\n\
                    t q[0]; // trailing comment\ntdg q[1];\ns q[2];\nsdg q[0];\nz q[1];\nx q[2];\n\
                    rz(3*pi/8) q[0];\nrz(-pi/4) q[1];\nrz(0) q[2];\nrx(pi/2) q[0];\ncz q[2], q[0];\n";
        let c = parse_circuit(text).unwrap();
        assert_eq!(
            c.gates(),
            &[
                Gate::ZPhase(0, Phase::new(1, 4)),
                Gate::ZPhase(1, Phase::new(7, 4)),
                Gate::ZPhase(2, Phase::new(1, 2)),
                Gate::ZPhase(0, Phase::new(3, 2)),
                Gate::ZPhase(1, Phase::pi()),
                Gate::XPhase(2, Phase::pi()),
                Gate::ZPhase(0, Phase::new(3, 8)),
                Gate::ZPhase(1, Phase::new(7, 4)),
                Gate::ZPhase(2, Phase::zero()),
                Gate::XPhase(0, Phase::new(1, 2)),
                Gate::Cz(2, 0),
            ]
        );
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(
            parse_circuit("qreg q[1];\n\nfoo q[0];"),
            Err(CircuitError::UnknownGate {
                line: 3,
                name: "foo".into()
            })
        );
        assert_eq!(
            parse_circuit("qreg q[2];\ncx q[0],q[2];"),
            Err(CircuitError::QubitOutOfRange {
                line: 2,
                qubit: 2,
                size: 2
            })
        );
        assert!(matches!(
            parse_circuit("qreg q[1];\nh q[0]"),
            Err(CircuitError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_circuit("h q[0];"),
            Err(CircuitError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_circuit("qreg q[2];\nrz(pi/x) q[0];"),
            Err(CircuitError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn emit_aliases() {
        assert_eq!(emit_circuit(&Circuit::new(1)), "qreg q[1];\n");
        let c = Circuit::from_gates(1, vec![Gate::ZPhase(0, Phase::new(1, 4))]).unwrap();
        assert!(emit_circuit(&c).contains("t q[0];"));
    }

    fn any_gate(n: usize) -> impl Strategy<Value = Gate> {
        let q = 0..n;
        let pair = (0..n, 1..n).prop_map(move |(a, d)| (a, (a + d) % n));
        let ph = (-16i64..16, prop::sample::select(vec![1i64, 2, 4, 8]))
            .prop_map(|(a, b)| Phase::new(a, b));
        prop_oneof![
            q.clone().prop_map(Gate::H),
            (q.clone(), ph.clone()).prop_map(|(q, p)| Gate::ZPhase(q, p)),
            (q, ph).prop_map(|(q, p)| Gate::XPhase(q, p)),
            pair.clone().prop_map(|(c, t)| Gate::Cnot {
                control: c,
                target: t
            }),
            pair.prop_map(|(a, b)| Gate::Cz(a, b)),
        ]
    }

    proptest! {
        #[test]
        fn round_trip(gates in prop::collection::vec(any_gate(4), 0..40)) {
            let c = Circuit::from_gates(4, gates).unwrap();
            let text = emit_circuit(&c);
            prop_assert_eq!(parse_circuit(&text).unwrap(), c);
            prop_assert_eq!(emit_circuit(&parse_circuit(&text).unwrap()), text);
        }

        #[test]
        fn round_trip_random(seed in 0u64..1000) {
            let c = random_circuit(&CircuitParams::new(3, 30), seed).unwrap();
            prop_assert_eq!(parse_circuit(&emit_circuit(&c)).unwrap(), c);
        }
    }
}
