//! The centric radical catalog and the dispatch from a row to its Out-action.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::data::OutActionData;
use super::kmodel::{KSubgroup, TAU};
use super::qfactors::{Factor, QuaternionFactors};
use super::data::clifford_oracle;
use super::special::{a_oracle, a_out_action, R1452};
use super::torus::{torus_oracle, torus_out_action, TorusAmbient};
use super::{Params, System};
use crate::algebra::group::GroupOps;
use crate::algebra::kelem::{KElem, KOps, ID3};
use crate::algebra::matrix::m2_identity;
use crate::error::{Error, Result};
use crate::weights::{weights, OracleReport, OutAction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spec {
    S,
    CsU,
    CsEZ,
    CsE,
    RRQt,
    QRR,
    QQR,
    QRQ,
    QQpR,
    QRQp,
    QQRt,
    QQpRtp,
    R1452,
    QQQ,
    QpQQ,
    QQQp,
    QQQt,
    QQQpt,
    R17,
    R17p,
    A,
    /// rows that only occur when `l = 0`
    Q0,
    Q0t,
    Q0tp,
}

use Spec::*;

pub const GENERIC_ROWS: [Spec; 21] = [S, CsU, CsEZ, CsE, RRQt, QRR, QQR, QRQ, QQpR, QRQp, QQRt, QQpRtp, R1452, QQQ, QpQQ, QQQp, QQQt, QQQpt, R17, R17p, A];
pub const L0_ROWS: [Spec; 10] = [S, Q0tp, CsEZ, Q0t, Q0, R17, R17p, A, CsE, CsU];

impl Spec {
    pub fn name(self) -> &'static str {
        match self {
            S => "S",
            CsU => "C_S(U)",
            CsEZ => "C_S(E/Z)",
            CsE => "C_S(E)",
            RRQt => "R1R2Q3<t>",
            QRR => "Q1R2R3",
            QQR => "Q1Q2R3",
            QRQ => "Q1R2Q3",
            QQpR => "Q1Q2'R3",
            QRQp => "Q1R2Q3'",
            QQRt => "Q1Q2R3<t>",
            QQpRtp => "Q1Q2'R3<t'>",
            R1452 => "R_{1^52}",
            QQQ => "Q1Q2Q3",
            QpQQ => "Q1'Q2Q3",
            QQQp => "Q1Q2Q3'",
            QQQt => "Q1Q2Q3<t>",
            QQQpt => "Q1Q2Q3'<t>",
            R17 => "R_{1^7}",
            R17p => "R'_{1^7}",
            A => "A",
            Q0 => "Q",
            Q0t => "Q<t>",
            Q0tp => "Q<t'>",
        }
    }

    /// Identifier accepted on the command line.
    pub fn id(self) -> &'static str {
        match self {
            S => "S",
            CsU => "CS_U",
            CsEZ => "CS_EZ",
            CsE => "CS_E",
            RRQt => "RRQt",
            QRR => "QRR",
            QQR => "QQR",
            QRQ => "QRQ",
            QQpR => "QQpR",
            QRQp => "QRQp",
            QQRt => "QQRt",
            QQpRtp => "QQpRtp",
            R1452 => "R1452",
            QQQ => "QQQ",
            QpQQ => "QpQQ",
            QQQp => "QQQp",
            QQQt => "QQQt",
            QQQpt => "QQQpt",
            R17 => "R17",
            R17p => "R17p",
            A => "A",
            Q0 => "Q",
            Q0t => "Qt",
            Q0tp => "Qtp",
        }
    }

    /// `a` in `v2|P| = a l + b`.
    pub fn type_a(self) -> u32 {
        match self {
            S | CsU | CsEZ | CsE => 3,
            RRQt | QRR => 2,
            QQR | QRQ | QQpR | QRQp | QQRt | QQpRtp | R1452 => 1,
            _ => 0,
        }
    }

    pub fn systems(self) -> &'static [System] {
        match self {
            CsU | CsE | A => &[System::F],
            QRR | QRQ | QRQp | QQQp => &[System::H],
            _ => &[System::H, System::F],
        }
    }

    pub fn in_system(self, system: System) -> bool {
        self.systems().contains(&system)
    }

    pub fn applies_at(self, l: u32) -> bool {
        if l == 0 {
            L0_ROWS.contains(&self)
        } else {
            GENERIC_ROWS.contains(&self)
        }
    }

    pub fn all() -> impl Iterator<Item = Spec> {
        GENERIC_ROWS.into_iter().chain([Q0, Q0t, Q0tp])
    }

    pub fn rows_at(l: u32, system: System) -> Vec<Spec> {
        let rows: &[Spec] = if l == 0 { &L0_ROWS } else { &GENERIC_ROWS };
        rows.iter().copied().filter(|s| s.in_system(system)).collect()
    }

    /// Rows whose Out-group is not obtained inside `N_K(P)`.
    pub fn out_k_exception(self) -> bool {
        matches!(self, R17 | R17p | R1452 | CsEZ | A | CsE)
    }

    pub fn from_data_file(self) -> bool {
        matches!(self, R17 | R17p)
    }

    fn quaternion_shape(self) -> Option<([Factor; 3], Twist)> {
        use Factor::{Q, Qp, R};
        Some(match self {
            RRQt => ([R, R, Q], Twist::Tau),
            QRR => ([Q, R, R], Twist::None),
            QQR => ([Q, Q, R], Twist::None),
            QRQ => ([Q, R, Q], Twist::None),
            QQpR => ([Q, Qp, R], Twist::None),
            QRQp => ([Q, R, Qp], Twist::None),
            QQRt => ([Q, Q, R], Twist::Tau),
            QQpRtp => ([Q, Qp, R], Twist::TauPrime),
            QQQ | Q0 => ([Q, Q, Q], Twist::None),
            QpQQ => ([Qp, Q, Q], Twist::None),
            QQQp => ([Q, Q, Qp], Twist::None),
            QQQt | Q0t => ([Q, Q, Q], Twist::Tau),
            QQQpt => ([Q, Q, Qp], Twist::Tau),
            Q0tp => ([Q, Qp, R], Twist::TauPrime),
            _ => return None,
        })
    }
}

impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for Spec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

impl FromStr for Spec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Spec> {
        Spec::all()
            .find(|x| x.id().eq_ignore_ascii_case(s) || x.name() == s)
            .ok_or_else(|| Error::SpecUnavailable(s.to_string(), "unknown catalog name".into()))
    }
}

#[derive(Clone, Copy, Debug)]
enum Twist {
    None,
    Tau,
    TauPrime,
}

/// Shared per-`l` construction context.
pub struct Catalog {
    pub params: Params,
    qf: OnceLock<Result<QuaternionFactors>>,
    torus: OnceLock<TorusAmbient>,
    data: OutActionData,
}

/// `|Out_D(P)|` against `|Out_K(P)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutIndexReport {
    pub spec: Spec,
    pub system: System,
    pub out_d: usize,
    pub out_k: Option<usize>,
    pub exception: bool,
}

impl OutIndexReport {
    pub fn index(&self) -> Option<usize> {
        self.out_k.map(|k| k / self.out_d)
    }
}

impl Catalog {
    pub fn new(l: u32) -> Result<Catalog> {
        Catalog::with_data(l, OutActionData::embedded())
    }

    pub fn with_data(l: u32, data: OutActionData) -> Result<Catalog> {
        Ok(Catalog { params: Params::new(l)?, qf: OnceLock::new(), torus: OnceLock::new(), data })
    }

    pub fn l(&self) -> u32 {
        self.params.l
    }

    pub fn quaternion_factors(&self) -> Result<&QuaternionFactors> {
        self.qf.get_or_init(|| QuaternionFactors::new(self.params.l, self.params.q)).as_ref().map_err(Clone::clone)
    }

    pub fn torus(&self) -> &TorusAmbient {
        self.torus.get_or_init(|| TorusAmbient::new(self.params.l))
    }

    fn check(&self, spec: Spec, system: System) -> Result<()> {
        if !spec.applies_at(self.l()) {
            return Err(Error::SpecUnavailable(spec.name().into(), format!("not a centric radical row at l = {}", self.l())));
        }
        if !spec.in_system(system) {
            return Err(Error::SpecUnavailable(spec.name().into(), format!("not a row of {system:?}")));
        }
        Ok(())
    }

    fn k_subgroup(&self, spec: Spec) -> Result<KSubgroup<'_>> {
        let qf = self.quaternion_factors()?;
        let (factors, twist) = spec.quaternion_shape().expect("quaternion row");
        let ops = KOps::new(qf.ctx.clone());
        let id = m2_identity();
        let tau: KElem = ops.canonical([id; 3], TAU);
        let t = match twist {
            Twist::None => None,
            Twist::Tau => Some(tau),
            Twist::TauPrime => {
                let m = qf.ops();
                Some(ops.mul(&ops.canonical([m.inv(&qf.a), qf.a, qf.a], ID3), &tau))
            }
        };
        KSubgroup::new(qf, factors, t)
    }

    pub fn out_action(&self, spec: Spec, system: System) -> Result<OutAction> {
        self.check(spec, system)?;
        if spec.quaternion_shape().is_some() {
            return self.k_subgroup(spec)?.out_action(system);
        }
        let amb = || self.torus();
        Ok(match spec {
            S => {
                let a = amb();
                torus_out_action(a, &a.with_minus(&a.d8), &a.with_minus(&a.d8))
            }
            CsE => {
                let a = amb();
                torus_out_action(a, &a.with_minus(&[0]), &all(a))
            }
            CsEZ => {
                let a = amb();
                let ambient = match system {
                    System::H => a.with_minus(&a.s4_point),
                    System::F => all(a),
                };
                torus_out_action(a, &a.with_minus(&a.v_point), &ambient)
            }
            CsU => {
                let a = amb();
                torus_out_action(a, &a.with_minus(&a.v_line), &all(a))
            }
            R1452 => R1452::new(self.quaternion_factors()?)?.action,
            A => a_out_action(),
            R17 | R17p => self.data.lookup(spec.name(), self.l(), system)?.out_action(),
            _ => unreachable!(),
        })
    }

    /// The labeled action of [`Catalog::out_action`] against the Dixon table of `P`.
    pub fn oracle(&self, spec: Spec, system: System) -> Result<OracleReport> {
        self.check(spec, system)?;
        if spec.quaternion_shape().is_some() {
            return self.k_subgroup(spec)?.oracle(system);
        }
        let a = self.torus();
        match spec {
            S => torus_oracle(a, &a.with_minus(&a.d8), &a.with_minus(&a.d8)),
            CsE => torus_oracle(a, &a.with_minus(&[0]), &all(a)),
            CsEZ => {
                let ambient = match system {
                    System::H => a.with_minus(&a.s4_point),
                    System::F => all(a),
                };
                torus_oracle(a, &a.with_minus(&a.v_point), &ambient)
            }
            CsU => torus_oracle(a, &a.with_minus(&a.v_line), &all(a)),
            R1452 => R1452::new(self.quaternion_factors()?)?.oracle(),
            A => a_oracle(),
            R17 | R17p => clifford_oracle(self.data.lookup(spec.name(), self.l(), system)?),
            _ => unreachable!(),
        }
    }

    pub fn out_index_check(&self, spec: Spec, system: System) -> Result<OutIndexReport> {
        let out_d = self.out_action(spec, system)?.out.order();
        let out_k = if spec.quaternion_shape().is_some() {
            Some(self.k_subgroup(spec)?.out_group(System::F).0.order())
        } else if spec == CsU || spec == S {
            Some(out_d)
        } else {
            None
        };
        Ok(OutIndexReport { spec, system, out_d, out_k, exception: spec.out_k_exception() })
    }

    /// `d -> w_P(D, 0, d)` at this `l`.
    pub fn weights(&self, spec: Spec, system: System) -> Result<BTreeMap<u32, i64>> {
        weights(&self.out_action(spec, system)?)
    }
}

fn all(a: &TorusAmbient) -> Vec<u32> {
    (0..a.g.order() as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nonzero(w: &BTreeMap<u32, i64>) -> Vec<(u32, i64)> {
        w.iter().filter(|(_, v)| **v != 0).map(|(d, v)| (*d, *v)).collect()
    }

    #[test]
    fn names_round_trip() {
        for s in Spec::all() {
            assert_eq!(s.id().parse::<Spec>().unwrap(), s);
            assert_eq!(s.name().parse::<Spec>().unwrap(), s);
        }
        assert_eq!(GENERIC_ROWS.iter().filter(|s| s.in_system(System::H)).count(), 18);
        assert_eq!(GENERIC_ROWS.iter().filter(|s| s.in_system(System::F)).count(), 17);
    }

    #[test]
    fn l0_rows_match_small_table() {
        let c = Catalog::new(0).unwrap();
        let want: [(Spec, System, &[(u32, i64)]); 8] = [
            (S, System::H, &[(6, 1), (7, 6), (8, 18), (9, 20), (10, 16)]),
            (Q0tp, System::F, &[(6, 1), (7, 4), (8, -8)]),
            (CsEZ, System::H, &[(8, -8), (9, -8)]),
            (Q0t, System::H, &[(6, 4), (7, 8), (8, -8)]),
            (Q0, System::H, &[(6, 16), (8, 16)]),
            (Q0, System::F, &[(8, 16)]),
            (R17, System::F, &[(7, -8)]),
            (CsU, System::F, &[(6, -1), (7, -4), (8, -8)]),
        ];
        for (spec, sys, w) in want {
            assert_eq!(nonzero(&c.weights(spec, sys).unwrap()), w.to_vec(), "{spec} {sys:?}");
        }
    }
}
