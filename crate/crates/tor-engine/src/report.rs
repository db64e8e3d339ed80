//! Tor dimension reports: the stable output format of the engine and the
//! oracle, plus degree-wise comparison.

use std::fmt;

/// How the engine turns a kernel into the next stage's generators.
///
/// All three choices yield exact resolutions, so the reported dimensions are
/// identical; only stage sizes and running time differ. That independence is
/// a theorem about Tor, and the test suite exercises it directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorChoice {
    /// Greedily drop kernel basis vectors that already lie in the module span
    /// of the vectors kept so far. Keeps stage sizes near-minimal; the
    /// default.
    Pruned,
    /// Every kernel basis vector, in elimination order.
    Full,
    /// Every kernel basis vector, in reversed elimination order.
    Reversed,
}

impl GeneratorChoice {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorChoice::Pruned => "pruned",
            GeneratorChoice::Full => "full",
            GeneratorChoice::Reversed => "reversed",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "pruned" => Some(GeneratorChoice::Pruned),
            "full" => Some(GeneratorChoice::Full),
            "reversed" => Some(GeneratorChoice::Reversed),
            _ => None,
        }
    }
}

impl fmt::Display for GeneratorChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dimensions of `Tor_q(𝕥, 𝕥)` per degree, with provenance and resource
/// flags. `dims[q]` is the dimension in degree `q`; the vector stops short of
/// `qmax` exactly when a resource cap interrupted the run, in which case
/// [`TorReport::flag`] holds the reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorReport {
    /// Coefficient field descriptor (e.g. `F5`, `Q`).
    pub ring: String,
    /// Human-readable description of the algebra the resolution was built over.
    pub algebra: String,
    /// The requested top degree.
    pub qmax: usize,
    /// `dims[q] = dim Tor_q` for `q = 0..dims.len()`.
    pub dims: Vec<usize>,
    /// Generator counts `g_0, g_1, …` of the free stages actually formed.
    pub generator_counts: Vec<usize>,
    /// How stage generators were picked (`pruned`, `full`, `reversed`, or
    /// `periodic` for the cyclic-group oracle).
    pub strategy: String,
    /// Set when a resource cap stopped the computation before `qmax`.
    pub flag: Option<String>,
    /// Non-fatal observations, e.g. a prune that fell back to the full basis.
    pub notes: Vec<String>,
}

impl TorReport {
    /// True when every degree up to `qmax` was computed.
    pub fn complete(&self) -> bool {
        self.dims.len() == self.qmax + 1
    }

    /// The largest degree with a computed dimension.
    pub fn complete_through(&self) -> usize {
        self.dims.len() - 1
    }

    /// The dimension in degree `q`, when computed.
    pub fn dim(&self, q: usize) -> Option<usize> {
        self.dims.get(q).copied()
    }
}

impl fmt::Display for TorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tor dimensions of {}", self.algebra)?;
        writeln!(f, "ring     = {}", self.ring)?;
        writeln!(f, "qmax     = {}", self.qmax)?;
        writeln!(f, "strategy = {}", self.strategy)?;
        writeln!(f, "stages   = {:?}", self.generator_counts)?;
        writeln!(f, "dims     = {:?}", self.dims)?;
        for note in &self.notes {
            writeln!(f, "note     = {note}")?;
        }
        match &self.flag {
            None => writeln!(f, "status   = complete"),
            Some(reason) => writeln!(
                f,
                "status   = partial through q = {}: {}",
                self.complete_through(),
                reason
            ),
        }
    }
}

/// Degree-wise equality of Tor dimensions through degree `upto`. Returns
/// false when either report stops short of `upto`: an uncomputed dimension is
/// never silently treated as equal.
pub fn compare_reports(a: &TorReport, b: &TorReport, upto: usize) -> bool {
    (0..=upto).all(|q| match (a.dim(q), b.dim(q)) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    })
}
