//! The supported algebra families and their level data conventions.

use diagrams::state::StateClass;
use diagrams::Permutation;

/// Which diagram algebra a [`crate::StructureAlgebra`] models.
///
/// A family fixes, for each level `t` (number of through-strands), the set of
/// admissible link states and the wiring group:
///
/// | family          | states  | wiring group | levels        |
/// |-----------------|---------|--------------|---------------|
/// | `Brauer`        | all     | symmetric    | n, n−2, …     |
/// | `TemperleyLieb` | planar  | trivial      | n, n−2, …     |
/// | `Jones`         | annular | cyclic       | n, n−2, …     |
/// | `GroupCyclic`   | —       | cyclic       | n only        |
///
/// `GroupCyclic` is the group algebra of the cyclic group of order `n`,
/// realized as the pure wiring diagrams on `n` strands (basis `g^0 … g^{n−1}`,
/// no arcs, so the loop parameter never enters).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Brauer,
    TemperleyLieb,
    Jones,
    GroupCyclic,
}

impl Family {
    /// The class of link states admitted at each level.
    pub fn state_class(self) -> StateClass {
        match self {
            Family::Brauer => StateClass::All,
            Family::TemperleyLieb => StateClass::Planar,
            Family::Jones | Family::GroupCyclic => StateClass::Annular,
        }
    }

    /// The wiring group on `t` through-strands, identity first.
    pub fn group(self, t: usize) -> Vec<Permutation> {
        match self {
            Family::Brauer => Permutation::symmetric_group(t),
            Family::TemperleyLieb => vec![Permutation::identity(t)],
            Family::Jones | Family::GroupCyclic => Permutation::cyclic_group(t),
        }
    }

    /// The levels of the algebra on `n` strands, ascending.
    pub fn levels(self, n: usize) -> Vec<usize> {
        match self {
            Family::GroupCyclic => vec![n],
            _ => (n % 2..=n).step_by(2).collect(),
        }
    }

    /// Filesystem/CLI-friendly name.
    pub fn name(self) -> &'static str {
        match self {
            Family::Brauer => "brauer",
            Family::TemperleyLieb => "tl",
            Family::Jones => "jones",
            Family::GroupCyclic => "group-cyclic",
        }
    }

    /// Parse a family name as written by [`Family::name`].
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "brauer" => Some(Family::Brauer),
            "tl" | "temperley-lieb" => Some(Family::TemperleyLieb),
            "jones" => Some(Family::Jones),
            "group-cyclic" | "cyclic" => Some(Family::GroupCyclic),
            _ => None,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
