//! Linear codes: generator matrices, codeword enumeration, minimum weight,
//! weight enumerators, shortening and puncturing.

use crate::error::{Error, Result};
use crate::gf::{FieldSpec, GFVec};
use std::fmt;
use std::sync::OnceLock;

/// Hard cap on q^k for full codeword enumeration. The pipeline needs at
/// most 5^5 = 3125; the cap just turns runaway inputs into a clean error.
const ENUMERATION_BUDGET: u128 = 1 << 22;

/// A k x n generator matrix with linearly independent rows.
///
/// k = 0 (the zero code) is representable because shortening a
/// one-dimensional code produces it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneratorMatrix {
    field: FieldSpec,
    n: usize,
    k: usize,
    rows: Vec<GFVec>,
}

impl GeneratorMatrix {
    pub fn new(field: FieldSpec, n: usize, rows: Vec<GFVec>) -> Result<Self> {
        let k = rows.len();
        if n == 0 || k > n {
            return Err(Error::BadInput(format!("bad shape n={n} k={k}")));
        }
        for r in &rows {
            if r.len() != n {
                return Err(Error::LengthMismatch(r.len(), n));
            }
            if r.field() != field {
                return Err(Error::FieldMismatch(r.field().q(), field.q()));
            }
        }
        let m = GeneratorMatrix { field, n, k, rows };
        let rank = m.digit_matrix_rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, k });
        }
        Ok(m)
    }

    pub fn from_digit_rows(field: FieldSpec, rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        let rows = rows
            .iter()
            .map(|r| GFVec::from_digits(field, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, n, rows)
    }

    /// The zero code of length n (no rows).
    pub fn zero_code(field: FieldSpec, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadInput("zero-length code".into()));
        }
        Ok(GeneratorMatrix {
            field,
            n,
            k: 0,
            rows: Vec::new(),
        })
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn rows(&self) -> &[GFVec] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, i: usize) -> &GFVec {
        &self.rows[i]
    }

    #[inline]
    pub fn digit(&self, r: usize, c: usize) -> u8 {
        self.rows[r].digit(c)
    }

    /// Column c as a digit vector of length k.
    pub fn column(&self, c: usize) -> Vec<u8> {
        self.rows.iter().map(|r| r.digit(c)).collect()
    }

    fn digit_rows(&self) -> Vec<Vec<u8>> {
        self.rows.iter().map(|r| r.digits().collect()).collect()
    }

    fn digit_matrix_rank(&self) -> usize {
        let mut m = self.digit_rows();
        row_reduce(self.field, &mut m, false)
    }

    pub fn is_systematic(&self) -> bool {
        self.k >= 1
            && (0..self.k).all(|i| (0..self.k).all(|j| self.digit(i, j) == u8::from(i == j)))
    }

    /// Row-reduces (with column swaps) to the form (I_k | A).
    ///
    /// Returns the systematic matrix together with the column permutation
    /// applied: `perm[new_pos] = old_pos`. The permutation is a monomial
    /// map, so the returned matrix generates an equivalent code; when no
    /// swaps are needed the permutation is the identity and the row space
    /// is unchanged.
    pub fn systematize(&self) -> Result<(GeneratorMatrix, Vec<usize>)> {
        if self.k == 0 {
            return Err(Error::BadInput("cannot systematize the zero code".into()));
        }
        let f = self.field;
        let mut m = self.digit_rows();
        let mut perm: Vec<usize> = (0..self.n).collect();
        for i in 0..self.k {
            // pivot search: first usable column at or after position i
            let mut pivot = None;
            'cols: for j in i..self.n {
                for r in i..self.k {
                    if m[r][perm[j]] != 0 {
                        pivot = Some((r, j));
                        break 'cols;
                    }
                }
            }
            let Some((r, j)) = pivot else {
                return Err(Error::RankDeficient {
                    rank: i,
                    k: self.k,
                });
            };
            perm.swap(i, j);
            m.swap(i, r);
            let inv = f.inv(m[i][perm[i]]);
            for c in 0..self.n {
                m[i][c] = f.mul(inv, m[i][c]);
            }
            for r2 in 0..self.k {
                if r2 != i && m[r2][perm[i]] != 0 {
                    let factor = m[r2][perm[i]];
                    for c in 0..self.n {
                        m[r2][c] = f.sub(m[r2][c], f.mul(factor, m[i][c]));
                    }
                }
            }
        }
        let rows = m
            .iter()
            .map(|row| {
                let digits: Vec<u8> = perm.iter().map(|&c| row[c]).collect();
                GFVec::from_digits(f, &digits)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((GeneratorMatrix::new(f, self.n, rows)?, perm))
    }

    /// Reduced row echelon form (no column swaps); unique per row space.
    pub fn rref(&self) -> GeneratorMatrix {
        let mut m = self.digit_rows();
        row_reduce(self.field, &mut m, true);
        let rows = m
            .iter()
            .take(self.k)
            .map(|r| GFVec::from_digits(self.field, r).expect("shape preserved"))
            .collect();
        GeneratorMatrix {
            field: self.field,
            n: self.n,
            k: self.k,
            rows,
        }
    }

    /// The k digit-string lines, newline-joined. Deterministic dedup key.
    pub fn matrix_key(&self) -> String {
        let mut s = String::with_capacity(self.k * (self.n + 1));
        for r in &self.rows {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    /// Serializes as a text block: `q=<q> n=<n> k=<k>` then k digit lines.
    pub fn to_block(&self) -> String {
        let mut s = format!("q={} n={} k={}\n", self.field.q(), self.n, self.k);
        s.push_str(&self.matrix_key());
        s
    }

    pub fn parse_block(text: &str) -> Result<GeneratorMatrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::BadInput("empty generator matrix block".into()))?;
        let mut q = None;
        let mut n = None;
        let mut k = None;
        for part in header.split_whitespace() {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::BadInput(format!("bad header field {part:?}")))?;
            let val: usize = val
                .parse()
                .map_err(|_| Error::BadInput(format!("bad header value {part:?}")))?;
            match key {
                "q" => q = Some(val),
                "n" => n = Some(val),
                "k" => k = Some(val),
                _ => return Err(Error::BadInput(format!("unknown header field {key:?}"))),
            }
        }
        let (Some(q), Some(n), Some(k)) = (q, n, k) else {
            return Err(Error::BadInput(format!("incomplete header {header:?}")));
        };
        let field = FieldSpec::new(q as u8)?;
        let rows: Vec<GFVec> = lines
            .take(k)
            .map(|l| GFVec::parse(field, l.trim()))
            .collect::<Result<_>>()?;
        if rows.len() != k {
            return Err(Error::BadInput(format!(
                "expected {k} rows, found {}",
                rows.len()
            )));
        }
        if k == 0 {
            return GeneratorMatrix::zero_code(field, n);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadInput("row length does not match header".into()));
        }
        GeneratorMatrix::new(field, n, rows)
    }
}

impl fmt::Debug for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorMatrix[{}x{} over F{}]", self.k, self.n, self.field.q())?;
        for r in &self.rows {
            write!(f, "\n  {r}")?;
        }
        Ok(())
    }
}

/// In-place row reduction; returns the rank. With `reduced` set, produces
/// the reduced echelon form (pivots 1, pivot columns cleared).
fn row_reduce(f: FieldSpec, m: &mut [Vec<u8>], reduced: bool) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = f.inv(m[rank][c]);
        for j in 0..cols {
            m[rank][j] = f.mul(inv, m[rank][j]);
        }
        let targets: Vec<usize> = if reduced {
            (0..rows).filter(|&r| r != rank).collect()
        } else {
            (rank + 1..rows).collect()
        };
        for r in targets {
            if m[r][c] != 0 {
                let factor = m[r][c];
                for j in 0..cols {
                    m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Codeword counts by weight: `counts[i]` = number of codewords of weight i.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightEnumerator {
    counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    /// Smallest positive weight with a nonzero count.
    pub fn min_positive(&self) -> Option<u32> {
        (1..self.counts.len()).find(|&i| self.counts[i] > 0).map(|i| i as u32)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.counts.iter().enumerate() {
            if c > 0 {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}:{c}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// A linear code: the row space of a generator matrix, with lazily cached
/// invariants. Caches fill idempotently; worst case a value is recomputed,
/// never torn, so values are safe to share across threads.
#[derive(Debug, Clone)]
pub struct LinearCode {
    gen: GeneratorMatrix,
    enumerator: OnceLock<WeightEnumerator>,
}

impl From<GeneratorMatrix> for LinearCode {
    fn from(gen: GeneratorMatrix) -> Self {
        LinearCode {
            gen,
            enumerator: OnceLock::new(),
        }
    }
}

impl LinearCode {
    pub fn new(gen: GeneratorMatrix) -> Self {
        gen.into()
    }

    #[inline]
    pub fn generator(&self) -> &GeneratorMatrix {
        &self.gen
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.gen.field()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.gen.n()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.gen.k()
    }

    pub fn size(&self) -> u128 {
        (self.field().q() as u128).pow(self.k() as u32)
    }

    fn check_enumeration_budget(&self) -> Result<()> {
        let size = self.size();
        if size > ENUMERATION_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "codeword enumeration (q^k)",
                needed: size,
                budget: ENUMERATION_BUDGET,
            });
        }
        Ok(())
    }

    /// Iterates all q^k codewords in odometer order of the message vector
    /// (first message digit fastest). The running codeword is updated
    /// incrementally by single-row additions.
    pub fn codewords(&self) -> Result<CodewordIter<'_>> {
        self.check_enumeration_budget()?;
        Ok(CodewordIter {
            gen: &self.gen,
            counters: vec![0; self.k()],
            current: GFVec::zero(self.field(), self.n())?,
            exhausted: false,
            started: false,
        })
    }

    /// Exact weight distribution A_0..A_n.
    pub fn weight_enumerator(&self) -> Result<&WeightEnumerator> {
        if let Some(e) = self.enumerator.get() {
            return Ok(e);
        }
        let mut counts = vec![0u64; self.n() + 1];
        for c in self.codewords()? {
            counts[c.weight() as usize] += 1;
        }
        Ok(self.enumerator.get_or_init(|| WeightEnumerator { counts }))
    }

    /// Minimum nonzero codeword weight; `None` for the zero code.
    pub fn min_weight(&self) -> Result<Option<u32>> {
        Ok(self.weight_enumerator()?.min_positive())
    }

    /// Membership test by reducing `v` against the rref basis.
    pub fn contains(&self, v: &GFVec) -> bool {
        if v.len() != self.n() || v.field() != self.field() {
            return false;
        }
        let f = self.field();
        let rref = self.gen.rref();
        let mut residue = *v;
        for row in rref.rows() {
            let pivot = (0..self.n()).find(|&c| row.digit(c) != 0).expect("nonzero row");
            let coeff = residue.digit(pivot);
            if coeff != 0 {
                residue = residue
                    .add_scaled(row, f.neg(coeff))
                    .expect("same shape");
            }
        }
        residue.weight() == 0
    }

    /// True iff both generators span the same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.n() == other.n()
            && self.k() == other.k()
            && self.field() == other.field()
            && self.gen.rref() == other.gen.rref()
    }

    /// Shortens at 1-based coordinate j: the codewords that are zero at j,
    /// with coordinate j deleted.
    pub fn shorten(&self, j: usize) -> Result<LinearCode> {
        let n = self.n();
        if j < 1 || j > n {
            return Err(Error::BadCoordinate(j, n));
        }
        let col = j - 1;
        let f = self.field();
        let mut rows: Vec<GFVec> = self.gen.rows().to_vec();
        // eliminate column `col` down to at most one row, then drop that row
        let pivot = (0..rows.len()).find(|&r| rows[r].digit(col) != 0);
        if let Some(p) = pivot {
            let inv = f.inv(rows[p].digit(col));
            let pivot_row = rows[p];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != p && row.digit(col) != 0 {
                    let factor = f.neg(f.mul(row.digit(col), inv));
                    *row = row.add_scaled(&pivot_row, factor)?;
                }
            }
            rows.remove(p);
        }
        let deleted = delete_coordinate(f, &rows, col)?;
        let gen = if deleted.is_empty() {
            GeneratorMatrix::zero_code(f, n - 1)?
        } else {
            GeneratorMatrix::new(f, n - 1, deleted)?
        };
        Ok(gen.into())
    }

    /// Punctures at 1-based coordinate j: deletes the coordinate from every
    /// codeword. Requires d >= 2 so the dimension is preserved.
    pub fn puncture(&self, j: usize) -> Result<LinearCode> {
        let n = self.n();
        if j < 1 || j > n {
            return Err(Error::BadCoordinate(j, n));
        }
        let d = self
            .min_weight()?
            .ok_or_else(|| Error::BadInput("cannot puncture the zero code".into()))?;
        if d < 2 {
            return Err(Error::MinWeightTooSmall(d));
        }
        let f = self.field();
        let rows = delete_coordinate(f, self.gen.rows(), j - 1)?;
        let punctured: LinearCode = GeneratorMatrix::new(f, n - 1, rows)?.into();
        let d2 = punctured.min_weight()?.expect("k >= 1 preserved");
        if d2 != d && d2 != d - 1 {
            return Err(Error::InvariantViolation(format!(
                "puncturing changed min weight {d} -> {d2}"
            )));
        }
        Ok(punctured)
    }
}

fn delete_coordinate(f: FieldSpec, rows: &[GFVec], col: usize) -> Result<Vec<GFVec>> {
    rows.iter()
        .map(|r| {
            let digits: Vec<u8> = (0..r.len()).filter(|&c| c != col).map(|c| r.digit(c)).collect();
            GFVec::from_digits(f, &digits)
        })
        .collect()
}

/// Incremental codeword enumeration in message-odometer order.
pub struct CodewordIter<'a> {
    gen: &'a GeneratorMatrix,
    counters: Vec<u8>,
    current: GFVec,
    exhausted: bool,
    started: bool,
}

impl CodewordIter<'_> {
    /// Message digits of the codeword most recently yielded.
    pub fn message(&self) -> &[u8] {
        &self.counters
    }
}

impl Iterator for CodewordIter<'_> {
    type Item = GFVec;

    fn next(&mut self) -> Option<GFVec> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current);
        }
        let q = self.gen.field().q();
        for i in 0..self.counters.len() {
            // adding row i once realizes both an increment and a wrap of
            // digit i (the wrap is the q-th consecutive addition)
            self.current = self
                .current
                .add_scaled(self.gen.row(i), 1)
                .expect("rows share shape");
            self.counters[i] += 1;
            if self.counters[i] < q {
                return Some(self.current);
            }
            self.counters[i] = 0;
        }
        self.exhausted = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::collections::HashSet;

    fn f5() -> FieldSpec {
        FieldSpec::new(5).unwrap()
    }

    pub(crate) fn repetition_code(n: usize) -> LinearCode {
        GeneratorMatrix::from_digit_rows(f5(), &[vec![1; n]])
            .unwrap()
            .into()
    }

    /// The [18,2,15] code over F5: the six projective-line points, each as
    /// a column with multiplicity 3.
    pub(crate) fn code_18_2_15() -> LinearCode {
        let mut row1 = Vec::new();
        let mut row2 = Vec::new();
        for (a, b) in [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (0, 1)] {
            for _ in 0..3 {
                row1.push(a);
                row2.push(b);
            }
        }
        GeneratorMatrix::from_digit_rows(f5(), &[row1, row2])
            .unwrap()
            .into()
    }

    pub(crate) fn random_code(rng: &mut StdRng, field: FieldSpec, n: usize, k: usize) -> LinearCode {
        loop {
            let rows: Vec<Vec<u8>> = (0..k)
                .map(|_| (0..n).map(|_| rng.gen_range(0..field.q())).collect())
                .collect();
            if let Ok(m) = GeneratorMatrix::from_digit_rows(field, &rows) {
                return m.into();
            }
        }
    }

    #[test]
    fn rejects_rank_deficient() {
        let ok = GeneratorMatrix::from_digit_rows(f5(), &[vec![1, 2, 3], vec![0, 1, 2]]);
        assert!(ok.is_ok());
        // second row is 2 * first row mod 5
        let err = GeneratorMatrix::from_digit_rows(f5(), &[vec![1, 2, 3], vec![2, 4, 1]]);
        assert!(matches!(err, Err(Error::RankDeficient { .. })));
    }

    #[test]
    fn systematize_identity_on_systematic_input() {
        let g = GeneratorMatrix::from_digit_rows(f5(), &[vec![1, 0, 3, 4], vec![0, 1, 2, 2]])
            .unwrap();
        let (sys, perm) = g.systematize().unwrap();
        assert_eq!(sys, g);
        assert_eq!(perm, vec![0, 1, 2, 3]);
    }

    #[test]
    fn systematize_output_has_identity_prefix() {
        let mut rng = StdRng::seed_from_u64(20);
        for _ in 0..50 {
            let c = random_code(&mut rng, f5(), 9, 3);
            let (sys, _) = c.generator().systematize().unwrap();
            assert!(sys.is_systematic());
        }
    }

    #[test]
    fn systematize_preserves_row_space_cardinality() {
        let mut rng = StdRng::seed_from_u64(21);
        let c = random_code(&mut rng, f5(), 19, 3);
        let (sys, _) = c.generator().systematize().unwrap();
        let sys_code: LinearCode = sys.into();
        let words: HashSet<Vec<u8>> = c
            .codewords()
            .unwrap()
            .map(|w| w.digits().collect())
            .collect();
        let sys_words: HashSet<Vec<u8>> = sys_code
            .codewords()
            .unwrap()
            .map(|w| w.digits().collect())
            .collect();
        assert_eq!(words.len(), 125);
        assert_eq!(sys_words.len(), 125);
    }

    #[test]
    fn codewords_of_length4_repetition() {
        let c = repetition_code(4);
        let words: Vec<String> = c.codewords().unwrap().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["0000", "1111", "2222", "3333", "4444"]);
    }

    #[test]
    fn codeword_count_18_2() {
        let c = code_18_2_15();
        assert_eq!(c.codewords().unwrap().count(), 25);
    }

    #[test]
    fn codewords_match_naive_products() {
        let mut rng = StdRng::seed_from_u64(22);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=12);
            let k = rng.gen_range(1..=3.min(n));
            let c = random_code(&mut rng, f5(), n, k);
            let f = c.field();
            let mut iter = c.codewords().unwrap();
            let mut seen = HashSet::new();
            let mut naive_min = u32::MAX;
            while let Some(w) = iter.next() {
                // recompute u*G from scratch for the yielded message
                let msg = iter.message().to_vec();
                let mut naive = GFVec::zero(f, n).unwrap();
                for (i, &m) in msg.iter().enumerate() {
                    naive = naive.add_scaled(c.generator().row(i), m).unwrap();
                }
                assert_eq!(w, naive);
                if w.weight() > 0 {
                    naive_min = naive_min.min(w.weight());
                }
                seen.insert(w);
            }
            assert_eq!(seen.len() as u128, c.size());
            assert_eq!(c.min_weight().unwrap(), Some(naive_min));
        }
    }

    #[test]
    fn min_weight_of_repetition_is_n() {
        for n in [1, 4, 17] {
            assert_eq!(repetition_code(n).min_weight().unwrap(), Some(n as u32));
        }
    }

    #[test]
    fn the_18_2_15_code() {
        let c = code_18_2_15();
        assert_eq!(c.min_weight().unwrap(), Some(15));
        let e = c.weight_enumerator().unwrap();
        assert_eq!(e.count(0), 1);
        assert_eq!(e.count(15), 24);
        assert_eq!(e.total(), 25);
        for w in c.codewords().unwrap() {
            assert!(w.weight() == 0 || w.weight() == 15);
        }
    }

    #[test]
    fn enumerator_of_2_1_repetition() {
        let c = repetition_code(2);
        let e = c.weight_enumerator().unwrap();
        assert_eq!(e.counts(), &[1, 0, 4]);
    }

    #[test]
    fn min_weight_agrees_with_enumerator() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..200 {
            let n = rng.gen_range(2..=10);
            let k = rng.gen_range(1..=3.min(n));
            let c = random_code(&mut rng, f5(), n, k);
            let e = c.weight_enumerator().unwrap().clone();
            let d = c.min_weight().unwrap().unwrap();
            assert_eq!(Some(d), e.min_positive());
            assert_eq!(e.count(0), 1);
        }
    }

    #[test]
    fn shorten_repetition_to_zero_code() {
        let c = repetition_code(4);
        let s = c.shorten(1).unwrap();
        assert_eq!(s.n(), 3);
        assert_eq!(s.k(), 0);
        assert_eq!(s.min_weight().unwrap(), None);
    }

    #[test]
    fn shorten_at_zero_column_keeps_dimension() {
        let g = GeneratorMatrix::from_digit_rows(f5(), &[vec![1, 0, 2, 0], vec![0, 0, 1, 4]])
            .unwrap();
        let c: LinearCode = g.into();
        let s = c.shorten(2).unwrap();
        assert_eq!((s.n(), s.k()), (3, 2));
    }

    #[test]
    fn shorten_drops_size_by_factor_q() {
        let mut rng = StdRng::seed_from_u64(24);
        for _ in 0..100 {
            let n = rng.gen_range(3..=10);
            let k = rng.gen_range(1..=3.min(n - 1));
            let c = random_code(&mut rng, f5(), n, k);
            let j = rng.gen_range(1..=n);
            let nonzero_col = c.generator().column(j - 1).iter().any(|&d| d != 0);
            let s = c.shorten(j).unwrap();
            if nonzero_col {
                assert_eq!(s.size() * 5, c.size());
            } else {
                assert_eq!(s.size(), c.size());
            }
        }
    }

    #[test]
    fn shorten_bound_on_min_weight() {
        // shortening at a non-zero coordinate: [n,k,d] -> [n-1,k-1,d'] with d' >= d
        let mut rng = StdRng::seed_from_u64(25);
        let mut checked = 0;
        while checked < 100 {
            let n = rng.gen_range(4..=10);
            let c = random_code(&mut rng, f5(), n, 2);
            let d = c.min_weight().unwrap().unwrap();
            if d < 2 {
                continue;
            }
            let j = (1..=n)
                .find(|&j| c.generator().column(j - 1).iter().any(|&x| x != 0))
                .unwrap();
            let s = c.shorten(j).unwrap();
            assert_eq!(s.k(), c.k() - 1);
            if s.k() > 0 {
                assert!(s.min_weight().unwrap().unwrap() >= d);
            }
            checked += 1;
        }
    }

    #[test]
    fn puncture_repetition() {
        let c = repetition_code(4);
        let p = c.puncture(2).unwrap();
        assert_eq!((p.n(), p.k()), (3, 1));
        assert_eq!(p.min_weight().unwrap(), Some(3));
    }

    #[test]
    fn puncture_the_18_2_15_code() {
        let c = code_18_2_15();
        let p = c.puncture(1).unwrap();
        assert_eq!((p.n(), p.k()), (17, 2));
        let d = p.min_weight().unwrap().unwrap();
        assert!(d == 14 || d == 15);
    }

    #[test]
    fn puncture_rejects_small_min_weight() {
        let g = GeneratorMatrix::from_digit_rows(f5(), &[vec![1, 0, 0], vec![0, 1, 1]]).unwrap();
        let c: LinearCode = g.into();
        assert!(matches!(
            c.puncture(1),
            Err(Error::MinWeightTooSmall(1))
        ));
    }

    #[test]
    fn puncture_then_reappend_gives_original() {
        let mut rng = StdRng::seed_from_u64(26);
        for _ in 0..50 {
            let n = rng.gen_range(4..=9);
            let c = random_code(&mut rng, f5(), n, 2);
            if c.min_weight().unwrap().unwrap() < 2 {
                continue;
            }
            let j = rng.gen_range(1..=n);
            let p = c.puncture(j).unwrap();
            // re-insert the deleted column at position j
            let rows: Vec<Vec<u8>> = c
                .generator()
                .rows()
                .iter()
                .zip(p.generator().rows())
                .map(|(orig, pr)| {
                    let mut digits: Vec<u8> = pr.digits().collect();
                    digits.insert(j - 1, orig.digit(j - 1));
                    digits
                })
                .collect();
            let rebuilt: LinearCode =
                GeneratorMatrix::from_digit_rows(f5(), &rows).unwrap().into();
            assert!(rebuilt.same_code(&c));
        }
    }

    #[test]
    fn contains_and_membership() {
        let c = code_18_2_15();
        for w in c.codewords().unwrap() {
            assert!(c.contains(&w));
        }
        let mut probe = GFVec::zero(f5(), 18).unwrap();
        probe.set_digit(0, 1);
        assert!(!c.contains(&probe));
    }

    #[test]
    fn block_round_trip() {
        let c = code_18_2_15();
        let block = c.generator().to_block();
        assert!(block.starts_with("q=5 n=18 k=2\n"));
        let parsed = GeneratorMatrix::parse_block(&block).unwrap();
        assert_eq!(&parsed, c.generator());
    }
}
