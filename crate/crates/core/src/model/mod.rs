//! The one-parameter qubit-qutrit family and its region-I images under
//! uniform acceleration of the qubit, the qutrit, or both.
//!
//! Matrices are stored in tensor order (`qubit ⊗ qutrit`, qubit most
//! significant). The accelerated qutrit gains a fourth level, the pair state
//! `|↑↓>`, placed after `|0>, |1>, |2>`. The conventional *listing order* used
//! for 1-based element names such as `ρ77` is
//! `|00>, |01>, |02>, |10>, |11>, |12>, |0↑↓>, |1↑↓>`.

mod closed;
mod oracle;

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, partial_trace, ComplexMatrix, TensorShape, ZERO};

pub use closed::{accelerate_closed, accelerate_closed_with, initial_state, qubit_channel, Fidelity};
pub use oracle::accelerate_oracle;

pub const P_MAX: f64 = 0.5;
pub const R_MAX: f64 = FRAC_PI_4;

/// Which subsystems are uniformly accelerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scenario {
    None,
    QubitOnly,
    QutritOnly,
    Both,
}

impl Scenario {
    pub const ALL: [Scenario; 4] = [Scenario::None, Scenario::QubitOnly, Scenario::QutritOnly, Scenario::Both];
    pub const ACCELERATED: [Scenario; 3] = [Scenario::QubitOnly, Scenario::QutritOnly, Scenario::Both];

    pub fn as_str(self) -> &'static str {
        match self {
            Scenario::None => "none",
            Scenario::QubitOnly => "qubit",
            Scenario::QutritOnly => "qutrit",
            Scenario::Both => "both",
        }
    }

    pub fn accelerates_qubit(self) -> bool {
        matches!(self, Scenario::QubitOnly | Scenario::Both)
    }

    pub fn accelerates_qutrit(self) -> bool {
        matches!(self, Scenario::QutritOnly | Scenario::Both)
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "none" => Ok(Scenario::None),
            "qubit" | "q" => Ok(Scenario::QubitOnly),
            "qutrit" | "t" => Ok(Scenario::QutritOnly),
            "both" | "qt" => Ok(Scenario::Both),
            other => {
                Err(Error::Parameter(format!("unknown scenario '{other}' (expected none, qubit, qutrit or both)")))
            }
        }
    }
}

/// Mixing parameter, acceleration parameters and Unruh phase.
///
/// `r_q` is ignored unless the qubit is accelerated, `r_t` unless the qutrit is.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    pub p: f64,
    pub r_q: f64,
    pub r_t: f64,
    pub phi: f64,
    pub scenario: Scenario,
}

impl ModelParams {
    /// Accelerates the scenario's subsystems with a common `r`; unused
    /// acceleration parameters are left at zero.
    pub fn new(scenario: Scenario, p: f64, r: f64) -> Self {
        Self {
            p,
            r_q: if scenario.accelerates_qubit() { r } else { 0.0 },
            r_t: if scenario.accelerates_qutrit() { r } else { 0.0 },
            phi: 0.0,
            scenario,
        }
    }

    pub fn with_phi(mut self, phi: f64) -> Self {
        self.phi = phi;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_mixing(self.p)?;
        if self.scenario.accelerates_qubit() {
            check_acceleration("r_q", self.r_q)?;
        }
        if self.scenario.accelerates_qutrit() {
            check_acceleration("r_t", self.r_t)?;
        }
        if !self.phi.is_finite() {
            return Err(Error::Parameter(format!("phi must be finite, got {}", self.phi)));
        }
        Ok(())
    }
}

pub(crate) fn check_mixing(p: f64) -> Result<()> {
    if (0.0..=P_MAX).contains(&p) {
        Ok(())
    } else {
        Err(Error::Parameter(format!("mixing parameter p = {p} outside [0, 0.5]")))
    }
}

pub(crate) fn check_acceleration(name: &str, r: f64) -> Result<()> {
    if (0.0..=R_MAX).contains(&r) {
        Ok(())
    } else {
        Err(Error::Parameter(format!("{name} = {r} outside [0, pi/4]")))
    }
}

/// Level of the (possibly extended) qutrit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QutritLevel {
    Zero,
    One,
    Two,
    /// The doubly occupied `|↑↓>` mode of the accelerated qutrit.
    Pair,
}

impl QutritLevel {
    pub fn index(self) -> usize {
        match self {
            QutritLevel::Zero => 0,
            QutritLevel::One => 1,
            QutritLevel::Two => 2,
            QutritLevel::Pair => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub qubit: u8,
    pub qutrit: QutritLevel,
}

impl BasisLabel {
    pub const fn new(qubit: u8, qutrit: QutritLevel) -> Self {
        Self { qubit, qutrit }
    }

    /// Label at 1-based position `k` of the listing order.
    pub fn listed(k: usize) -> Option<Self> {
        LISTING.get(k.checked_sub(1)?).copied()
    }

    /// Row of this label in a tensor-ordered matrix with `qutrit_dim` qutrit levels.
    pub fn tensor_index(self, qutrit_dim: usize) -> Option<usize> {
        let t = self.qutrit.index();
        (self.qubit < 2 && t < qutrit_dim).then(|| self.qubit as usize * qutrit_dim + t)
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.qutrit {
            QutritLevel::Pair => write!(f, "|{}↑↓>", self.qubit),
            level => write!(f, "|{}{}>", self.qubit, level.index()),
        }
    }
}

const LISTING: [BasisLabel; 8] = [
    BasisLabel::new(0, QutritLevel::Zero),
    BasisLabel::new(0, QutritLevel::One),
    BasisLabel::new(0, QutritLevel::Two),
    BasisLabel::new(1, QutritLevel::Zero),
    BasisLabel::new(1, QutritLevel::One),
    BasisLabel::new(1, QutritLevel::Two),
    BasisLabel::new(0, QutritLevel::Pair),
    BasisLabel::new(1, QutritLevel::Pair),
];

/// Deviations of a state from trace one, Hermiticity and positivity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Physicality {
    pub trace_error: f64,
    pub hermiticity_defect: f64,
    pub min_eigenvalue: f64,
}

impl Physicality {
    pub const TRACE_TOL: f64 = 1e-12;
    pub const HERMITIAN_TOL: f64 = 1e-12;
    pub const MIN_EIGENVALUE: f64 = -1e-10;

    pub fn is_physical(&self) -> bool {
        self.trace_error < Self::TRACE_TOL
            && self.hermiticity_defect < Self::HERMITIAN_TOL
            && self.min_eigenvalue > Self::MIN_EIGENVALUE
    }
}

/// Region-I density matrix of the qubit-qutrit pair: `2 ⊗ 3` without
/// acceleration, `2 ⊗ 4` once the qutrit carries the pair level.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionIState {
    matrix: ComplexMatrix,
    shape: TensorShape,
}

impl RegionIState {
    /// Wraps a tensor-ordered matrix of dimension 6 or 8. No physicality check.
    pub fn from_matrix(matrix: ComplexMatrix) -> Result<Self> {
        let qutrit_dim = match matrix.dim() {
            6 => 3,
            8 => 4,
            d => return Err(Error::Dimension(format!("region-I states are 6- or 8-dimensional, got {d}"))),
        };
        let shape = TensorShape::new(vec![2, qutrit_dim])?;
        Ok(Self { matrix, shape })
    }

    pub(crate) fn zeros(extended: bool) -> Self {
        let dim = if extended { 8 } else { 6 };
        Self::from_matrix(ComplexMatrix::zeros(dim)).expect("fixed dimension")
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn shape(&self) -> &TensorShape {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn qutrit_dim(&self) -> usize {
        self.shape.factor_dims()[1]
    }

    pub fn is_extended(&self) -> bool {
        self.qutrit_dim() == 4
    }

    /// Basis labels in matrix row order.
    pub fn labels(&self) -> Vec<BasisLabel> {
        let n = self.qutrit_dim();
        let levels = [QutritLevel::Zero, QutritLevel::One, QutritLevel::Two, QutritLevel::Pair];
        (0..2u8).flat_map(|q| levels[..n].iter().map(move |&t| BasisLabel::new(q, t))).collect()
    }

    /// Basis labels in listing order.
    pub fn listing(&self) -> &'static [BasisLabel] {
        &LISTING[..self.dim()]
    }

    /// `<row| ρ |col>`; zero for pair labels of an unextended state.
    pub fn element(&self, row: BasisLabel, col: BasisLabel) -> Complex64 {
        let n = self.qutrit_dim();
        match (row.tensor_index(n), col.tensor_index(n)) {
            (Some(r), Some(c)) => self.matrix[(r, c)],
            _ => ZERO,
        }
    }

    /// Element at 1-based listing positions, e.g. `listed(3, 4)` for `ρ34`.
    pub fn listed(&self, i: usize, j: usize) -> Complex64 {
        match (BasisLabel::listed(i), BasisLabel::listed(j)) {
            (Some(a), Some(b)) => self.element(a, b),
            _ => ZERO,
        }
    }

    pub(crate) fn set_element(&mut self, row: BasisLabel, col: BasisLabel, value: Complex64) {
        let n = self.qutrit_dim();
        let r = row.tensor_index(n).expect("label inside the state's basis");
        let c = col.tensor_index(n).expect("label inside the state's basis");
        self.matrix[(r, c)] = value;
    }

    /// Sets the real symmetric pair `ρij = ρji = value` by listing position.
    pub(crate) fn set_listed(&mut self, i: usize, j: usize, value: f64) {
        let (a, b) = (LISTING[i - 1], LISTING[j - 1]);
        self.set_element(a, b, Complex64::new(value, 0.0));
        self.set_element(b, a, Complex64::new(value, 0.0));
    }

    /// The matrix permuted into listing order.
    pub fn to_listing_order(&self) -> ComplexMatrix {
        let listing = self.listing();
        ComplexMatrix::from_fn(self.dim(), |r, c| self.element(listing[r], listing[c]))
    }

    /// Embeds a `2 ⊗ 3` state into `2 ⊗ 4` with empty pair-state rows and columns.
    pub fn padded(&self) -> RegionIState {
        if self.is_extended() {
            return self.clone();
        }
        let mut out = RegionIState::zeros(true);
        for a in self.labels() {
            for b in self.labels() {
                out.set_element(a, b, self.element(a, b));
            }
        }
        out
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn physicality(&self) -> Result<Physicality> {
        let trace = self.matrix.trace();
        let hermiticity_defect = self.matrix.hermiticity_defect();
        let min_eigenvalue = hermitian_eig(&self.matrix.hermitian_part())?.min_eigenvalue();
        Ok(Physicality { trace_error: (trace - Complex64::new(1.0, 0.0)).norm(), hermiticity_defect, min_eigenvalue })
    }

    /// Qubit marginal (2×2).
    pub fn reduce_qubit(&self) -> ComplexMatrix {
        partial_trace(&self.matrix, &self.shape, &[0]).expect("state shape matches its matrix")
    }

    /// Qutrit marginal (3×3, or 4×4 when extended).
    pub fn reduce_qutrit(&self) -> ComplexMatrix {
        partial_trace(&self.matrix, &self.shape, &[1]).expect("state shape matches its matrix")
    }
}

/// Free-function form of [`RegionIState::reduce_qubit`].
pub fn reduce_qubit(state: &RegionIState) -> ComplexMatrix {
    state.reduce_qubit()
}

/// Free-function form of [`RegionIState::reduce_qutrit`].
pub fn reduce_qutrit(state: &RegionIState) -> ComplexMatrix {
    state.reduce_qutrit()
}
