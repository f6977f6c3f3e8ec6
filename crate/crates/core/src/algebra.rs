//! Signatures, blade bookkeeping and product tables.

use std::fmt;
use std::sync::Arc;

use crate::error::GaError;

/// Largest supported number of generators.
pub const MAX_GENERATORS: usize = 6;

/// Dimension above which the build-time associativity audit is skipped.
const ASSOCIATIVITY_AUDIT_DIM: usize = 5;

/// Interpretation of the 1-vectors. Never affects arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Point-based: 1-vectors are points, the wedge is the join.
    Standard,
    /// Plane-based: 1-vectors are hyperplanes, the wedge is the meet.
    Dual,
}

/// Counts of generators squaring to +1, −1 and 0, plus the orientation flag.
///
/// Generators are ordered degenerate first, then positive, then negative, so
/// that in `(n,0,1)` the degenerate generator is `e0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub p: u8,
    pub q: u8,
    pub r: u8,
    pub orientation: Orientation,
}

impl Signature {
    pub const fn new(p: u8, q: u8, r: u8, orientation: Orientation) -> Self {
        Self { p, q, r, orientation }
    }

    /// Euclidean PGA of dimension `n`: `(n,0,1)`, plane-based.
    pub const fn pga(n: u8) -> Self {
        Self::new(n, 0, 1, Orientation::Dual)
    }

    /// Conformal model of dimension `n`: `(n+1,1,0)`, point-based.
    pub const fn cga(n: u8) -> Self {
        Self::new(n + 1, 1, 0, Orientation::Standard)
    }

    pub const fn dim(&self) -> usize {
        (self.p + self.q + self.r) as usize
    }

    /// Square of generator `i` under this signature.
    pub fn generator_square(&self, i: usize) -> i8 {
        let (r, p) = (self.r as usize, self.p as usize);
        if i < r {
            0
        } else if i < r + p {
            1
        } else {
            -1
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.r > 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = match self.orientation {
            Orientation::Standard => "",
            Orientation::Dual => "*",
        };
        write!(f, "P(R{star}_{{{},{},{}}})", self.p, self.q, self.r)
    }
}

/// Bitmask naming a basis blade: bit `i` set ⇔ `e_i` is a factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BladeIndex(pub u8);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);

    pub fn generator(i: usize) -> Self {
        BladeIndex(1 << i)
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn bits(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, generator: usize) -> bool {
        self.0 & (1 << generator) != 0
    }

    /// Ascending generator indices.
    pub fn generators(self) -> impl Iterator<Item = usize> {
        (0..8).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// Name in the text form, e.g. `e013`. The scalar blade is `1`.
    pub fn name(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let mut s = String::from("e");
        for g in self.generators() {
            s.push(char::from_digit(g as u32, 10).expect("generator index < 10"));
        }
        s
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Sign of reordering the concatenated generator string `a b` into ascending
/// order, ignoring any squares.
pub(crate) fn reorder_sign(a: usize, b: usize) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

/// One entry of the geometric product table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductEntry {
    pub sign: i8,
    pub blade: BladeIndex,
}

/// Poincaré duality table: `J(b) = sign · partner`, with `b ∧ partner = +I`.
#[derive(Clone, Debug)]
pub struct DualityMap {
    entries: Vec<(BladeIndex, i8)>,
}

impl DualityMap {
    fn build(dim: usize) -> Self {
        let full = (1usize << dim) - 1;
        let entries = (0..1usize << dim)
            .map(|b| {
                let c = full ^ b;
                (BladeIndex(c as u8), reorder_sign(b, c))
            })
            .collect();
        Self { entries }
    }

    /// Partner blade and sign of `J(b)`.
    pub fn image(&self, b: BladeIndex) -> (BladeIndex, i8) {
        self.entries[b.bits()]
    }

    /// Partner blade and sign of `J⁻¹(b)`.
    pub fn preimage(&self, b: BladeIndex) -> (BladeIndex, i8) {
        // J(c) = s·b  ⇒  J⁻¹(b) = s·c  (s = ±1)
        let c = self.entries[b.bits()].0;
        let (_, s) = self.entries[c.bits()];
        (c, s)
    }
}

/// A Clifford algebra of a fixed signature with its product tables.
///
/// Immutable after construction; share it behind an [`Arc`].
#[derive(Debug)]
pub struct Algebra {
    signature: Signature,
    dim: usize,
    metric: Vec<i8>,
    table: Vec<ProductEntry>,
    basis: Vec<BladeIndex>,
    duality: DualityMap,
}

impl Algebra {
    /// Builds the algebra for `sig`, failing if it has more than
    /// [`MAX_GENERATORS`] generators.
    pub fn new(sig: Signature) -> Result<Arc<Algebra>, GaError> {
        let dim = sig.dim();
        if dim > MAX_GENERATORS {
            return Err(GaError::DimensionTooLarge { dim, max: MAX_GENERATORS });
        }
        let metric: Vec<i8> = (0..dim).map(|i| sig.generator_square(i)).collect();
        let size = 1usize << dim;

        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                let mut sign = reorder_sign(a, b);
                let common = a & b;
                for (i, &m) in metric.iter().enumerate() {
                    if common & (1 << i) != 0 {
                        sign *= m;
                    }
                }
                table.push(ProductEntry { sign, blade: BladeIndex((a ^ b) as u8) });
            }
        }

        let mut basis: Vec<BladeIndex> = (0..size).map(|b| BladeIndex(b as u8)).collect();
        basis.sort_by_key(|b| (b.grade(), b.0));

        let algebra = Algebra { signature: sig, dim, metric, table, basis, duality: DualityMap::build(dim) };
        if dim <= ASSOCIATIVITY_AUDIT_DIM {
            algebra.audit_associativity()?;
        }
        Ok(Arc::new(algebra))
    }

    /// Euclidean PGA `P(R*_{n,0,1})`.
    pub fn pga(n: u8) -> Result<Arc<Algebra>, GaError> {
        Self::new(Signature::pga(n))
    }

    /// Conformal algebra `R_{n+1,1}`.
    pub fn cga(n: u8) -> Result<Arc<Algebra>, GaError> {
        Self::new(Signature::cga(n))
    }

    fn audit_associativity(&self) -> Result<(), GaError> {
        let size = self.size();
        for a in 0..size {
            for b in 0..size {
                let ab = self.table[a * size + b];
                for c in 0..size {
                    let ab_c = self.table[ab.blade.bits() * size + c];
                    let bc = self.table[b * size + c];
                    let a_bc = self.table[a * size + bc.blade.bits()];
                    let left = ab.sign * ab_c.sign;
                    let right = bc.sign * a_bc.sign;
                    if left != right {
                        return Err(GaError::NonAssociative {
                            a: BladeIndex(a as u8),
                            b: BladeIndex(b as u8),
                            c: BladeIndex(c as u8),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn orientation(&self) -> Orientation {
        self.signature.orientation
    }

    /// Number of generators.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of basis blades, `2^dim`.
    pub fn size(&self) -> usize {
        1 << self.dim
    }

    /// Per-generator squares.
    pub fn metric_diag(&self) -> &[i8] {
        &self.metric
    }

    #[inline]
    pub fn product(&self, a: BladeIndex, b: BladeIndex) -> ProductEntry {
        self.table[a.bits() * self.size() + b.bits()]
    }

    #[inline]
    pub(crate) fn table(&self) -> &[ProductEntry] {
        &self.table
    }

    /// Basis blades in canonical order: by grade, then by bitmask.
    pub fn basis(&self) -> &[BladeIndex] {
        &self.basis
    }

    pub fn blades_of_grade(&self, k: usize) -> impl Iterator<Item = BladeIndex> + '_ {
        self.basis.iter().copied().filter(move |b| b.grade() == k)
    }

    pub fn pseudoscalar_blade(&self) -> BladeIndex {
        BladeIndex(((1usize << self.dim) - 1) as u8)
    }

    pub fn duality(&self) -> &DualityMap {
        &self.duality
    }

    /// Looks up a blade from its generator digits, allowing any order.
    /// Returns the canonical blade and the reordering sign.
    pub fn blade_from_generators(&self, gens: &[usize]) -> Result<(BladeIndex, i8), GaError> {
        let mut bits = 0usize;
        let mut sign = 1i8;
        for &g in gens {
            if g >= self.dim {
                return Err(GaError::UnknownGenerator { index: g, dim: self.dim });
            }
            if bits & (1 << g) != 0 {
                return Err(GaError::RepeatedGenerator { index: g });
            }
            sign *= reorder_sign(bits, 1 << g);
            bits |= 1 << g;
        }
        Ok((BladeIndex(bits as u8), sign))
    }

    /// Whether `other` has the same signature, so multivectors may mix.
    pub fn compatible(&self, other: &Algebra) -> bool {
        self.signature == other.signature
    }
}
