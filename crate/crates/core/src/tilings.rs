//! Exhaustive square/domino tilings of linear boards and circular
//! bracelets, and the counting argument that rebuilds the one-step gap
//! identity `L(n) = L(N)·L(n-N) + (-1)^(N+1)·L(n-2N)` from raw counts.
//!
//! A 1×n board has cells `0..n`; a bracelet has `n` labelled cells
//! `a_0..a_(n-1)` arranged in a circle. Dominoes are recorded by their
//! start cell: on a bracelet, the domino starting at `c` covers `c` and
//! `(c+1) mod n`, so a start of `n-1` means a domino wraps the boundary
//! between `a_(n-1)` and `a_0`, and such a bracelet is *out of phase*.
//! Tilings are identified by their sorted list of domino starts (squares
//! fill every uncovered cell), which makes enumeration orders and export
//! lines canonical.
//!
//! The partition behind the gap identity cuts the circle at a fixed gap
//! `N`: every n-bracelet falls in exactly one class by which dominoes sit
//! at starts `0`, `N-1`, `N`:
//!
//! * `r1`: dominoes at both start `0` and start `N-1`
//! * `b`:  domino at start `0` only
//! * `r2`: no domino at start `0`, domino at start `N`
//! * `a`:  none of the above
//!
//! Classes `a` and `b` biject with in/in and out/in ordered pairs of an
//! N-bracelet and an (n-N)-bracelet ([`embed_pair`] constructs the image);
//! `r1 + r2` minus the remaining pair classes (`c`: in/out, `d`: out/out)
//! is the correction `A = (-1)^(N+1) · L(n-2N)`, so
//! `L(n) = L(N)·L(n-N) + A` falls out of the enumeration.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::seq::{board_count, lucas};

/// Largest board length `enumerate_boards` accepts (counts grow as F(n+1)).
pub const MAX_BOARD_CELLS: i64 = 30;

/// Largest bracelet size `enumerate_bracelets` accepts (counts grow as L(n)).
pub const MAX_BRACELET_CELLS: i64 = 26;

/// One tile of a linear board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Piece {
    Square,
    Domino,
}

impl Piece {
    pub fn cells(self) -> usize {
        match self {
            Piece::Square => 1,
            Piece::Domino => 2,
        }
    }
}

/// A tiling of a 1×n board as the left-to-right sequence of its pieces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoardTiling {
    n: usize,
    pieces: Vec<Piece>,
}

impl BoardTiling {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Start cells of the dominoes, in increasing order.
    pub fn domino_starts(&self) -> Vec<usize> {
        let mut starts = Vec::new();
        let mut pos = 0;
        for p in &self.pieces {
            if *p == Piece::Domino {
                starts.push(pos);
            }
            pos += p.cells();
        }
        starts
    }

    /// Canonical one-line form: `-` for the all-squares tiling, otherwise
    /// `D:` followed by the comma-separated domino starts.
    pub fn export_line(&self) -> String {
        format_starts(&self.domino_starts())
    }
}

/// Whether a bracelet's tiling wraps the boundary between the last and
/// first cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    InPhase,
    OutOfPhase,
}

/// A square/domino tiling of a circular board with `n` labelled cells,
/// identified by its sorted domino start cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bracelet {
    n: usize,
    domino_starts: Vec<usize>,
}

impl Bracelet {
    /// Build a bracelet from domino start cells, validating that `n >= 1`,
    /// every start is a cell, and no two dominoes overlap. Starts may
    /// arrive in any order; they are stored sorted.
    pub fn new(n: usize, mut starts: Vec<usize>) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("bracelet needs at least one cell".into()));
        }
        starts.sort_unstable();
        let mut covered = vec![false; n];
        for &s in &starts {
            if s >= n {
                return Err(Error::Domain(format!(
                    "domino start {s} outside a {n}-cell bracelet"
                )));
            }
            for cell in [s, (s + 1) % n] {
                if covered[cell] {
                    return Err(Error::Domain(format!(
                        "dominoes overlap on cell {cell} of a {n}-cell bracelet"
                    )));
                }
                covered[cell] = true;
            }
        }
        Ok(Bracelet {
            n,
            domino_starts: starts,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domino_starts(&self) -> &[usize] {
        &self.domino_starts
    }

    pub fn has_domino_at(&self, start: usize) -> bool {
        self.domino_starts.binary_search(&start).is_ok()
    }

    /// Out of phase exactly when a domino covers the boundary pair
    /// `(a_(n-1), a_0)`, i.e. a domino starts at cell `n-1`.
    pub fn phase(&self) -> Phase {
        if self.n >= 2 && self.has_domino_at(self.n - 1) {
            Phase::OutOfPhase
        } else {
            Phase::InPhase
        }
    }

    /// Canonical one-line form, same shape as boards.
    pub fn export_line(&self) -> String {
        format_starts(&self.domino_starts)
    }
}

fn format_starts(starts: &[usize]) -> String {
    if starts.is_empty() {
        "-".to_string()
    } else {
        let joined: Vec<String> = starts.iter().map(|s| s.to_string()).collect();
        format!("D:{}", joined.join(","))
    }
}

/// All domino-start sets tiling the linear cell range `lo..hi`.
fn linear_starts(lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn rec(pos: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == hi {
            out.push(cur.clone());
            return;
        }
        rec(pos + 1, hi, cur, out);
        if pos + 1 < hi {
            cur.push(pos);
            rec(pos + 2, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Every tiling of a 1×n board, sorted by domino-start list. Requires
/// `0 <= n <= MAX_BOARD_CELLS`; the result has `board_count(n)` entries.
pub fn enumerate_boards(n: i64) -> Result<Vec<BoardTiling>> {
    if n < 0 {
        return Err(Error::Domain(format!("board length must be >= 0, got {n}")));
    }
    if n > MAX_BOARD_CELLS {
        return Err(Error::BoundExceeded(format!(
            "board enumeration is capped at {MAX_BOARD_CELLS} cells, got {n}"
        )));
    }
    let n = n as usize;
    fn rec(remaining: usize, n: usize, pieces: &mut Vec<Piece>, out: &mut Vec<BoardTiling>) {
        if remaining == 0 {
            out.push(BoardTiling {
                n,
                pieces: pieces.clone(),
            });
            return;
        }
        pieces.push(Piece::Square);
        rec(remaining - 1, n, pieces, out);
        pieces.pop();
        if remaining >= 2 {
            pieces.push(Piece::Domino);
            rec(remaining - 2, n, pieces, out);
            pieces.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort_by_cached_key(|t| t.domino_starts());
    Ok(out)
}

/// Every tiling of an n-cell bracelet, sorted by domino-start list.
/// Requires `1 <= n <= MAX_BRACELET_CELLS`; the result has
/// `bracelet_count(n)` entries, split `board_count(n)` in phase and
/// `board_count(n-2)` out of phase.
pub fn enumerate_bracelets(n: i64) -> Result<Vec<Bracelet>> {
    if n < 1 {
        return Err(Error::Domain(format!(
            "bracelet enumeration requires n >= 1, got {n}"
        )));
    }
    if n > MAX_BRACELET_CELLS {
        return Err(Error::BoundExceeded(format!(
            "bracelet enumeration is capped at {MAX_BRACELET_CELLS} cells, got {n}"
        )));
    }
    let n = n as usize;
    let mut out = Vec::new();
    // In phase: no wrap domino, so cells 0..n tile linearly.
    for starts in linear_starts(0, n) {
        out.push(Bracelet {
            n,
            domino_starts: starts,
        });
    }
    // Out of phase: a domino wraps (a_(n-1), a_0); cells 1..n-1 tile linearly.
    if n >= 2 {
        for mut starts in linear_starts(1, n - 1) {
            starts.push(n - 1);
            out.push(Bracelet {
                n,
                domino_starts: starts,
            });
        }
    }
    out.sort_by(|x, y| x.domino_starts.cmp(&y.domino_starts));
    Ok(out)
}

/// Phase class of an ordered pair of bracelets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClass {
    /// Both in phase (partition class `a`).
    BothIn,
    /// First out of phase, second in phase (partition class `b`).
    FirstOut,
    /// First in phase, second out of phase (class `c`).
    SecondOut,
    /// Both out of phase (class `d`).
    BothOut,
}

pub fn classify_pair(first: &Bracelet, second: &Bracelet) -> PairClass {
    match (first.phase(), second.phase()) {
        (Phase::InPhase, Phase::InPhase) => PairClass::BothIn,
        (Phase::OutOfPhase, Phase::InPhase) => PairClass::FirstOut,
        (Phase::InPhase, Phase::OutOfPhase) => PairClass::SecondOut,
        (Phase::OutOfPhase, Phase::OutOfPhase) => PairClass::BothOut,
    }
}

/// Embed an ordered pair into one `(first.n + second.n)`-cell bracelet.
///
/// Only the two classes that biject onto whole-bracelet classes are
/// embeddable; writing `N = first.n()` and `n` for the combined size:
///
/// * `BothIn`: the first bracelet is laid onto cells `a_1..a_N` (start `s`
///   maps to `s+1`) and the second onto `a_(N+1)..a_(n-1), a_0` (start `s`
///   maps to `N+1+s`; its last possible start lands at `n-1`, the wrap
///   domino of the image). Images are exactly the class-`a` bracelets.
/// * `FirstOut`: the first bracelet's wrap domino becomes the domino at
///   `(a_0, a_1)` (start 0), its other starts map to `s+1`, and the second
///   is laid onto `a_N..a_(n-1)` (start `s` maps to `N+s`). Images are
///   exactly the class-`b` bracelets.
///
/// The `class` argument must match the pair's actual phases; `SecondOut`
/// and `BothOut` pairs have no embedding and are rejected.
pub fn embed_pair(first: &Bracelet, second: &Bracelet, class: PairClass) -> Result<Bracelet> {
    let actual = classify_pair(first, second);
    if actual != class {
        return Err(Error::Domain(format!(
            "pair classifies as {actual:?}, not the requested {class:?}"
        )));
    }
    let gap = first.n();
    let n = gap + second.n();
    match class {
        PairClass::BothIn => {
            let starts: Vec<usize> = first
                .domino_starts()
                .iter()
                .map(|s| s + 1)
                .chain(second.domino_starts().iter().map(|s| gap + 1 + s))
                .collect();
            Bracelet::new(n, starts)
        }
        PairClass::FirstOut => {
            let mut starts = vec![0];
            for &s in first.domino_starts() {
                if s != gap - 1 {
                    starts.push(s + 1);
                }
            }
            for &s in second.domino_starts() {
                starts.push(gap + s);
            }
            Bracelet::new(n, starts)
        }
        PairClass::SecondOut | PairClass::BothOut => Err(Error::Domain(format!(
            "{class:?} pairs have no embedding; they are counted against the correction term"
        ))),
    }
}

/// Counts from the gap-N partition of all n-bracelets, alongside the pair
/// counts they are checked against. All counts are exact enumeration
/// results; `correction` is `(r1 + r2) - (c + d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub n: i64,
    pub gap: i64,
    pub count_a: BigInt,
    pub count_b: BigInt,
    pub count_c: BigInt,
    pub count_d: BigInt,
    pub count_r1: BigInt,
    pub count_r2: BigInt,
    pub correction: BigInt,
}

impl PartitionReport {
    /// JSON form: counts as decimal strings under the keys
    /// `a, b, c, d, r1, r2, A`.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "N": self.gap,
            "a": self.count_a.to_string(),
            "b": self.count_b.to_string(),
            "c": self.count_c.to_string(),
            "d": self.count_d.to_string(),
            "r1": self.count_r1.to_string(),
            "r2": self.count_r2.to_string(),
            "A": self.correction.to_string(),
        })
    }
}

/// The correction term `A = (-1)^(N+1) · L(n-2N)` that reconciles the
/// bracelet partition with the pair count. Requires `gap >= 2`, `n >= 2·gap`.
pub fn correction_term(n: i64, gap: i64) -> Result<BigInt> {
    if gap < 2 || n / 2 < gap {
        return Err(Error::Domain(format!(
            "correction term requires N >= 2 and n >= 2N, got n={n}, N={gap}"
        )));
    }
    let value = lucas(n - 2 * gap);
    Ok(if (gap + 1) % 2 == 0 { value } else { -value })
}

/// Partition all n-bracelets by their dominoes at starts `0`, `gap-1` and
/// `gap`, count all ordered pairs of a gap-bracelet and an (n-gap)-bracelet
/// by phase class, and cross-check every count against its closed form
/// before reporting. Requires `gap >= 2`, `n >= 2·gap`,
/// `n <= MAX_BRACELET_CELLS`.
pub fn partition_bracelets(n: i64, gap: i64) -> Result<PartitionReport> {
    if gap < 2 || n / 2 < gap {
        return Err(Error::Domain(format!(
            "partition requires N >= 2 and n >= 2N, got n={n}, N={gap}"
        )));
    }
    let g = gap as usize;
    let (mut a, mut b, mut r1, mut r2) = (0u64, 0u64, 0u64, 0u64);
    for br in enumerate_bracelets(n)? {
        let at_zero = br.has_domino_at(0);
        if at_zero && br.has_domino_at(g - 1) {
            r1 += 1;
        } else if at_zero {
            b += 1;
        } else if br.has_domino_at(g) {
            r2 += 1;
        } else {
            a += 1;
        }
    }

    let firsts = enumerate_bracelets(gap)?;
    let seconds = enumerate_bracelets(n - gap)?;
    let (mut pa, mut pb, mut pc, mut pd) = (0u64, 0u64, 0u64, 0u64);
    for f in &firsts {
        for s in &seconds {
            match classify_pair(f, s) {
                PairClass::BothIn => pa += 1,
                PairClass::FirstOut => pb += 1,
                PairClass::SecondOut => pc += 1,
                PairClass::BothOut => pd += 1,
            }
        }
    }

    let f = board_count;
    let checks: [(&str, BigInt, BigInt); 8] = [
        ("a vs pair class", a.into(), pa.into()),
        ("b vs pair class", b.into(), pb.into()),
        ("a closed form", a.into(), f(gap) * f(n - gap)),
        ("b closed form", b.into(), f(gap - 2) * f(n - gap)),
        ("r1 closed form", r1.into(), f(gap - 3) * f(n - gap - 1)),
        (
            "r2 closed form",
            r2.into(),
            f(n - 2) - f(gap - 2) * f(n - gap - 2),
        ),
        ("c closed form", pc.into(), f(gap) * f(n - gap - 2)),
        ("d closed form", pd.into(), f(gap - 2) * f(n - gap - 2)),
    ];
    for (what, got, expected) in checks {
        if got != expected {
            return Err(Error::Mismatch(format!(
                "{what} disagrees at n={n}, N={gap}: enumerated {got}, closed form {expected}"
            )));
        }
    }

    let correction = BigInt::from(r1 + r2) - BigInt::from(pc + pd);
    if correction != correction_term(n, gap)? {
        return Err(Error::Mismatch(format!(
            "correction disagrees at n={n}, N={gap}: enumerated {correction}"
        )));
    }

    Ok(PartitionReport {
        n,
        gap,
        count_a: a.into(),
        count_b: b.into(),
        count_c: pc.into(),
        count_d: pd.into(),
        count_r1: r1.into(),
        count_r2: r2.into(),
        correction,
    })
}
