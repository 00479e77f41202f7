use crate::error::{Error, Result};
use crate::schreier::LevelGraph;

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    /// Checks symmetry exactly.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        let m = SymMatrix {
            dim,
            data: rows.concat(),
        };
        m.check_symmetric()?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    pub(crate) fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn check_symmetric(&self) -> Result<()> {
        for row in 0..self.dim {
            for col in row + 1..self.dim {
                if self.get(row, col) != self.get(col, row) {
                    return Err(Error::NotSymmetric { row, col });
                }
            }
        }
        Ok(())
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.data
            .chunks(self.dim.max(1))
            .map(|r| r.iter().sum())
            .collect()
    }

    pub fn scaled(&self, factor: f64) -> SymMatrix {
        SymMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// `(self + I) / 2`: the lazy version of a Markov operator, spectrum
    /// moved from `[-1, 1]` into `[0, 1]`.
    pub fn lazy(&self) -> SymMatrix {
        let mut out = self.scaled(0.5);
        for i in 0..self.dim {
            out.data[i * self.dim + i] += 0.5;
        }
        out
    }
}

/// `T_n`: entry `(u, v)` counts generators mapping `u` to `v`; the diagonal
/// counts loops. Row sums equal `|S|`.
pub fn adjacency_matrix(g: &LevelGraph) -> SymMatrix {
    let n = g.vertex_count();
    let mut m = SymMatrix::zeros(n);
    for u in 0..n as u32 {
        for &v in g.neighbors_of(u) {
            m.data[u as usize * n + v as usize] += 1.0;
        }
    }
    m
}

/// `M_n = T_n / |S ∪ S^-1|`.
pub fn markov_operator(t: &SymMatrix, generator_count: usize) -> Result<SymMatrix> {
    if generator_count == 0 {
        return Err(Error::InvalidArgument(
            "generator count must be positive".into(),
        ));
    }
    Ok(t.scaled(1.0 / generator_count as f64))
}
