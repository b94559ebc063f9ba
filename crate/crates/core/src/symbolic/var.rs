use core::fmt;

/// A symbolic variable.
///
/// The derived ordering is lexicographic on `(kind, indices)` and fixes the
/// canonical order of monomials and terms everywhere in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    /// Positive-structure coordinate `c_{j,i}` (`j`: block, `i`: index).
    C(i32, i32),
    /// Simple root value `α_i(t)` of a torus element.
    T(i32),
    /// Nakajima variable `Y_{m,i}`.
    Y(i32, i32),
}

impl VarId {
    /// `c_{j,i}`. Panics unless `j, i ≥ 1`.
    pub fn c(j: i32, i: i32) -> Self {
        assert!(j >= 1 && i >= 1, "c[{j},{i}] needs positive indices");
        VarId::C(j, i)
    }

    pub fn t(i: i32) -> Self {
        assert!(i >= 1, "t[{i}] needs a positive index");
        VarId::T(i)
    }

    pub fn y(m: i32, i: i32) -> Self {
        assert!(i >= 1, "Y[{m},{i}] needs a positive index");
        VarId::Y(m, i)
    }

    /// Renames `Y_{m,l}` to `c_{m,l}` and back; `T` is left alone.
    pub fn swap_c_y(self) -> Self {
        match self {
            VarId::C(j, i) => VarId::Y(j, i),
            VarId::Y(m, i) => VarId::C(m, i),
            v => v,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::C(j, i) => write!(f, "c[{j},{i}]"),
            VarId::T(i) => write!(f, "t[{i}]"),
            VarId::Y(m, i) => write!(f, "Y[{m},{i}]"),
        }
    }
}
