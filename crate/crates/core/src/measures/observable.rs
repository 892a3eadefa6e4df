//! Local spin observables, their spectral projectors and eigenbasis overlaps.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix, I, ONE};

/// Eigenvalues closer than this are treated as one degenerate outcome.
const CLUSTER_TOL: f64 = 1e-9;

/// Local Hilbert space an observable acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    Qubit,
    Qutrit,
    /// Qutrit plus the pair level `|↑↓>` of the accelerated frame.
    ExtendedQutrit,
}

impl Space {
    pub fn dim(self) -> usize {
        match self {
            Space::Qubit => 2,
            Space::Qutrit => 3,
            Space::ExtendedQutrit => 4,
        }
    }

    /// The qutrit-side space matching a qutrit factor of dimension `dim`.
    pub fn qutrit_side(dim: usize) -> Result<Self> {
        match dim {
            3 => Ok(Space::Qutrit),
            4 => Ok(Space::ExtendedQutrit),
            d => Err(Error::Dimension(format!("no qutrit observable space of dimension {d}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

/// Spin operators in the computational basis.
///
/// Qubit: Pauli matrices. Qutrit: `S_x = -i(|1><2| - |2><1|)`,
/// `S_y = i(|0><2| - |2><0|)`, `S_z = -i(|0><1| - |1><0|)`. On the extended
/// qutrit the operators are zero-padded, so `|↑↓>` sits in the outcome-0 eigenspace.
pub fn spin_matrix(space: Space, axis: Axis) -> ComplexMatrix {
    let n = space.dim();
    let mut m = ComplexMatrix::zeros(n);
    let mut set = |r: usize, c: usize, z: Complex64| {
        m[(r, c)] = z;
        m[(c, r)] = z.conj();
    };
    match (space, axis) {
        (Space::Qubit, Axis::X) => set(0, 1, ONE),
        (Space::Qubit, Axis::Y) => set(0, 1, -I),
        (Space::Qubit, Axis::Z) => {
            set(0, 0, ONE);
            set(1, 1, -ONE);
        }
        (_, Axis::X) => set(1, 2, -I),
        (_, Axis::Y) => set(0, 2, I),
        (_, Axis::Z) => set(0, 1, -I),
    }
    m
}

/// One eigenvalue of an observable with the projector onto its eigenspace.
#[derive(Clone, Debug)]
pub struct SpectralProjector {
    pub outcome: f64,
    pub projector: ComplexMatrix,
}

/// Hermitian operator together with its spectral resolution.
#[derive(Clone, Debug)]
pub struct Observable {
    name: String,
    matrix: ComplexMatrix,
    spectrum: Vec<SpectralProjector>,
}

impl Observable {
    /// Diagonalizes `matrix` and groups degenerate eigenvalues. Outcomes within
    /// `1e-9` of an integer are reported as that integer.
    pub fn from_hermitian(name: impl Into<String>, matrix: ComplexMatrix) -> Result<Self> {
        let eig = hermitian_eig(&matrix)?;
        let n = matrix.dim();
        let mut spectrum: Vec<SpectralProjector> = Vec::new();
        let mut k = 0;
        while k < n {
            let mut end = k + 1;
            while end < n && (eig.eigenvalues[k] - eig.eigenvalues[end]).abs() < CLUSTER_TOL {
                end += 1;
            }
            let mean = eig.eigenvalues[k..end].iter().sum::<f64>() / (end - k) as f64;
            let outcome = if (mean - mean.round()).abs() < CLUSTER_TOL { mean.round() + 0.0 } else { mean };
            let mut projector = ComplexMatrix::zeros(n);
            for j in k..end {
                projector = &projector + &ComplexMatrix::projector(&eig.eigenvector(j));
            }
            spectrum.push(SpectralProjector { outcome, projector: projector.hermitian_part() });
            k = end;
        }
        Ok(Self { name: name.into(), matrix, spectrum })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Spectral projectors ordered by decreasing outcome.
    pub fn spectrum(&self) -> &[SpectralProjector] {
        &self.spectrum
    }

    pub fn outcomes(&self) -> Vec<f64> {
        self.spectrum.iter().map(|s| s.outcome).collect()
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `Σ outcome · projector`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.spectrum.iter().fold(ComplexMatrix::zeros(self.dim()), |acc, s| &acc + &s.projector.scale(s.outcome))
    }
}

/// `S_x, S_y, S_z` on the requested space.
pub fn standard_observables(space: Space) -> Vec<Observable> {
    let prefix = match space {
        Space::Qubit => "S^A",
        Space::Qutrit => "S^B",
        Space::ExtendedQutrit => "S^B+",
    };
    Axis::ALL
        .iter()
        .map(|&axis| {
            Observable::from_hermitian(format!("{prefix}_{axis}"), spin_matrix(space, axis))
                .expect("spin operators are Hermitian")
        })
        .collect()
}

/// Maximal squared overlap between eigenvectors of two observables, with its logarithms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OverlapBound {
    pub omega: f64,
    pub log2_omega: f64,
    pub neg_log2_omega: f64,
}

/// `Ω = max |<u|v>|²` over eigenvectors `u`, `v` of the two observables.
///
/// Degenerate eigenspaces are handled basis-free: for each pair of spectral
/// projectors the maximum over unit vectors is the largest eigenvalue of `P_a P_b P_a`.
pub fn overlap_bound(first: &Observable, second: &Observable) -> Result<OverlapBound> {
    if first.dim() != second.dim() {
        return Err(Error::Dimension(format!(
            "observables act on spaces of dimension {} and {}",
            first.dim(),
            second.dim()
        )));
    }
    let mut omega = 0.0_f64;
    for a in first.spectrum() {
        for b in second.spectrum() {
            let sandwich = &(&a.projector * &b.projector) * &a.projector;
            omega = omega.max(hermitian_eig(&sandwich.hermitian_part())?.max_eigenvalue());
        }
    }
    let omega = omega.min(1.0);
    Ok(OverlapBound { omega, log2_omega: omega.log2(), neg_log2_omega: -omega.log2() })
}
