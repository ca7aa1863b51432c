use serde::{Deserialize, Serialize};

use crate::qseries::{int, Rational};

/// Intersection numbers `(L^2, L.K, K^2, c2)` of a line bundle on a surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceGeometry {
    pub l2: i64,
    pub lk: i64,
    pub k2: i64,
    pub c2: i64,
}

impl SurfaceGeometry {
    pub const fn new(l2: i64, lk: i64, k2: i64, c2: i64) -> Self {
        SurfaceGeometry { l2, lk, k2, c2 }
    }

    /// `chi(O) = (K^2 + c2) / 12`; not necessarily integral for arbitrary input.
    pub fn chi_o(&self) -> Rational {
        Rational::new((self.k2 + self.c2).into(), 12.into())
    }

    /// `chi(L) = (L^2 - L.K) / 2 + chi(O)`.
    pub fn chi_l(&self) -> Rational {
        Rational::new((self.l2 - self.lk).into(), 2.into()) + self.chi_o()
    }

    /// `(L^2, L.K, K^2, c2)` as rationals, the evaluation point of `T_delta`.
    pub fn values(&self) -> [Rational; 4] {
        [int(self.l2), int(self.lk), int(self.k2), int(self.c2)]
    }
}
