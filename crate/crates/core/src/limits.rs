//! Size caps shared by every enumeration and matrix assembly.

/// Environment variable that overrides [`Limits::max_matrix_cells`].
pub const CAP_CELLS_ENV: &str = "KOSZULKT_CAP_CELLS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest Weyl group that will be enumerated element by element.
    pub max_weyl_order: usize,
    /// Largest weight system computed by the multiplicity recursion.
    pub max_weights: usize,
    /// Largest dense integer matrix (rows times columns) that will be assembled.
    pub max_matrix_cells: usize,
    /// Largest estimated number of term-by-term products in one batch of
    /// polynomial expansions.
    pub max_product_terms: u64,
    /// Largest number of coefficient products in one wedge of torus forms or one
    /// Weyl-orbit sweep over a form.
    pub max_form_products: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_weyl_order: 1_000_000,
            max_weights: 500_000,
            max_matrix_cells: 4_000_000,
            max_product_terms: 4_000_000_000,
            max_form_products: 10_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with the matrix cap taken from `KOSZULKT_CAP_CELLS` when it is set
    /// to a valid integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cells) = std::env::var(CAP_CELLS_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.max_matrix_cells = cells;
        }
        limits
    }

    pub(crate) fn check_cells(&self, what: &str, rows: usize, cols: usize) -> crate::Result<()> {
        match rows.checked_mul(cols) {
            Some(cells) if cells <= self.max_matrix_cells => Ok(()),
            _ => Err(crate::Error::cap(format!("{what} matrix of {rows}x{cols} cells"), self.max_matrix_cells)),
        }
    }
}
