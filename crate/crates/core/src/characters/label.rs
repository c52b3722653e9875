use std::fmt;

/// Symbolic name of an irreducible character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharLabel {
    /// linear character of a generalized quaternion group, `e1 + 2 e2` for `a -> (-1)^e1, b -> (-1)^e2`
    QuaternionLinear(u8),
    QuaternionPsi { u: u32, t: u32 },
    /// row index in the Dixon table of a small factor group
    TableRow(u32),
    TensorProduct(Vec<CharLabel>),
    /// `(θ-orbit representative, β)` for the method of little groups
    LittleGroups(Box<CharLabel>, Box<CharLabel>),
    /// inflation from a quotient
    Lift(Box<CharLabel>),
    /// linear character of a homocyclic group, by exponent vector
    AbelianHom(Vec<u32>),
    /// one of the two extensions of an invariant character to an index-2 overgroup
    Extension(Box<CharLabel>, u8),
    /// induced from an index-2 subgroup; the smaller member of the orbit
    Induced(Box<CharLabel>),
    Opaque(u32),
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::QuaternionLinear(i) => write!(f, "lin{i}"),
            CharLabel::QuaternionPsi { u, t } => write!(f, "psi({u},{t})"),
            CharLabel::TableRow(i) => write!(f, "#{i}"),
            CharLabel::TensorProduct(v) => {
                let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                write!(f, "{}", parts.join("⊗"))
            }
            CharLabel::LittleGroups(t, b) => write!(f, "({t};{b})"),
            CharLabel::Lift(c) => write!(f, "lift({c})"),
            CharLabel::AbelianHom(v) => write!(f, "hom{v:?}"),
            CharLabel::Extension(c, e) => write!(f, "ext{e}({c})"),
            CharLabel::Induced(c) => write!(f, "ind({c})"),
            CharLabel::Opaque(i) => write!(f, "x{i}"),
        }
    }
}
