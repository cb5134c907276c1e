//! Root systems of types A, B, C, D, computable linear orders on the
//! indices, and finite windows with their order-preserving relabeling.
//!
//! Indices are positive integers. An order is described by two streams: the
//! `top` stream lists indices from the maximal side downwards and the `bottom`
//! stream lists indices from the minimal side upwards, so that
//! `ε_top[0] ≻ ε_top[1] ≻ … ≻ … ≻ ε_bottom[1] ≻ ε_bottom[0]`.
//! Every `ε_i` is taken to be positive.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SystemType {
    A,
    B,
    C,
    D,
}

impl SystemType {
    pub const ALL: [SystemType; 4] = [SystemType::A, SystemType::B, SystemType::C, SystemType::D];

    pub fn min_rank(self) -> usize {
        match self {
            SystemType::D => 2,
            _ => 1,
        }
    }

    pub fn check_rank(self, rank: usize) -> Result<()> {
        if rank < self.min_rank() {
            return Err(Error::RankTooSmall {
                system: self,
                rank,
                min: self.min_rank(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SystemType::A => "A",
            SystemType::B => "B",
            SystemType::C => "C",
            SystemType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for SystemType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(SystemType::A),
            "B" | "b" => Ok(SystemType::B),
            "C" | "c" => Ok(SystemType::C),
            "D" | "d" => Ok(SystemType::D),
            other => Err(Error::Parse(format!("unknown system type {other:?}"))),
        }
    }
}

/// A root written in the ε-basis.
///
/// `Diff(i, j)` is `ε_i − ε_j`, `Sum(i, j)` is `ε_i + ε_j` with `i < j`,
/// `Double(i)` is `2ε_i` and `Short(i)` is `ε_i`. The derived ordering
/// (variant first, then indices) is the canonical ordering used for printing
/// and for monomial keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    Diff(u32, u32),
    Sum(u32, u32),
    Double(u32),
    Short(u32),
}

impl Root {
    pub fn diff(i: u32, j: u32) -> Result<Root> {
        if i == 0 || j == 0 || i == j {
            return Err(Error::InvalidRoot(format!("e{i}-e{j}")));
        }
        Ok(Root::Diff(i, j))
    }

    pub fn sum(i: u32, j: u32) -> Result<Root> {
        if i == 0 || j == 0 || i == j {
            return Err(Error::InvalidRoot(format!("e{i}+e{j}")));
        }
        Ok(Root::Sum(i.min(j), i.max(j)))
    }

    pub fn double(i: u32) -> Result<Root> {
        if i == 0 {
            return Err(Error::InvalidRoot("2e0".into()));
        }
        Ok(Root::Double(i))
    }

    pub fn short(i: u32) -> Result<Root> {
        if i == 0 {
            return Err(Error::InvalidRoot("e0".into()));
        }
        Ok(Root::Short(i))
    }

    pub fn indices(&self) -> Vec<u32> {
        match *self {
            Root::Diff(i, j) | Root::Sum(i, j) => vec![i, j],
            Root::Double(i) | Root::Short(i) => vec![i],
        }
    }

    pub fn allowed_in(&self, system: SystemType) -> bool {
        match self {
            Root::Diff(..) => true,
            Root::Sum(..) => system != SystemType::A,
            Root::Double(_) => system == SystemType::C,
            Root::Short(_) => system == SystemType::B,
        }
    }

    /// Coordinates in the ε-basis.
    pub fn vector(&self) -> BTreeMap<u32, i32> {
        let mut v = BTreeMap::new();
        match *self {
            Root::Diff(i, j) => {
                v.insert(i, 1);
                v.insert(j, -1);
            }
            Root::Sum(i, j) => {
                v.insert(i, 1);
                v.insert(j, 1);
            }
            Root::Double(i) => {
                v.insert(i, 2);
            }
            Root::Short(i) => {
                v.insert(i, 1);
            }
        }
        v
    }

    fn check_canonical(self) -> Result<Root> {
        match self {
            Root::Diff(i, j) => Root::diff(i, j),
            Root::Sum(i, j) => Root::sum(i, j),
            Root::Double(i) => Root::double(i),
            Root::Short(i) => Root::short(i),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Diff(i, j) => write!(f, "e{i}-e{j}"),
            Root::Sum(i, j) => write!(f, "e{i}+e{j}"),
            Root::Double(i) => write!(f, "2e{i}"),
            Root::Short(i) => write!(f, "e{i}"),
        }
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Root> {
        let t = s.trim();
        let bad = || Error::InvalidRoot(s.to_string());
        let index = |x: &str| -> Result<u32> {
            let x = x.strip_prefix('e').ok_or_else(bad)?;
            if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse::<u32>().map_err(|_| bad())
        };
        if let Some(rest) = t.strip_prefix("2e") {
            return Root::double(index(&format!("e{rest}"))?).map_err(|_| bad());
        }
        if let Some(pos) = t.get(1..).and_then(|r| r.find(['-', '+'])).map(|p| p + 1) {
            let (a, b) = (index(&t[..pos])?, index(&t[pos + 1..])?);
            return if &t[pos..=pos] == "-" {
                Root::diff(a, b).map_err(|_| bad())
            } else {
                Root::sum(a, b).map_err(|_| bad())
            };
        }
        Root::short(index(t)?).map_err(|_| bad())
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Root, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Whether an integer vector in the ε-basis is a root (of either sign) of the
/// given infinite-rank system.
pub fn is_root_vector(system: SystemType, v: &BTreeMap<u32, i32>) -> bool {
    let nz: Vec<i32> = v.values().copied().filter(|&c| c != 0).collect();
    match nz.as_slice() {
        [a, b] => {
            let opposite = *a == -*b && a.abs() == 1;
            let same = *a == *b && a.abs() == 1;
            opposite || (same && system != SystemType::A)
        }
        [a] => {
            (a.abs() == 2 && system == SystemType::C) || (a.abs() == 1 && system == SystemType::B)
        }
        _ => false,
    }
}

/// `α` and `β` are strongly orthogonal when neither `α + β` nor `α − β` is a root.
pub fn strongly_orthogonal(system: SystemType, a: &Root, b: &Root) -> bool {
    let (va, vb) = (a.vector(), b.vector());
    let mut sum = va.clone();
    let mut diff = va;
    for (k, c) in vb {
        *sum.entry(k).or_insert(0) += c;
        *diff.entry(k).or_insert(0) -= c;
    }
    !is_root_vector(system, &sum) && !is_root_vector(system, &diff)
}

/// Positive roots of the standard rank-`n` system, ordered canonically.
///
/// `A` with rank `n` means `A_{n−1}` on the indices `1..=n`.
pub fn positive_roots(system: SystemType, n: usize) -> Result<Vec<Root>> {
    system.check_rank(n)?;
    let n = n as u32;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Root::Diff(i, j));
            if system != SystemType::A {
                out.push(Root::Sum(i, j));
            }
        }
        match system {
            SystemType::B => out.push(Root::Short(i)),
            SystemType::C => out.push(Root::Double(i)),
            _ => {}
        }
    }
    out.sort();
    Ok(out)
}

/// Height (sum of simple-root coefficients) of a standard positive root.
pub fn height(system: SystemType, n: usize, root: &Root) -> u32 {
    let n = n as u32;
    match (system, *root) {
        (_, Root::Diff(i, j)) => j - i,
        (SystemType::B, Root::Short(i)) => n - i + 1,
        (SystemType::B, Root::Sum(i, j)) => 2 * n + 2 - i - j,
        (SystemType::C, Root::Double(i)) => 2 * (n - i) + 1,
        (SystemType::C, Root::Sum(i, j)) => 2 * n + 1 - i - j,
        (SystemType::D, Root::Sum(i, j)) => 2 * n - i - j,
        _ => 0,
    }
}

/// A stream of distinct positive indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IndexStream {
    List { items: Vec<u32> },
    Arith { start: u32, step: u32 },
}

impl IndexStream {
    pub fn empty() -> Self {
        IndexStream::List { items: Vec::new() }
    }

    pub fn list(items: impl IntoIterator<Item = u32>) -> Self {
        IndexStream::List {
            items: items.into_iter().collect(),
        }
    }

    pub fn arith(start: u32, step: u32) -> Self {
        IndexStream::Arith { start, step }
    }

    /// `None` for an infinite stream.
    pub fn len(&self) -> Option<usize> {
        match self {
            IndexStream::List { items } => Some(items.len()),
            IndexStream::Arith { .. } => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    pub fn get(&self, pos: usize) -> Option<u32> {
        match self {
            IndexStream::List { items } => items.get(pos).copied(),
            IndexStream::Arith { start, step } => {
                let v = *start as u64 + (*step as u64) * pos as u64;
                u32::try_from(v).ok()
            }
        }
    }

    pub fn position(&self, i: u32) -> Option<usize> {
        match self {
            IndexStream::List { items } => items.iter().position(|&x| x == i),
            IndexStream::Arith { start, step } => {
                (i >= *start && (i - start) % step == 0).then(|| ((i - start) / step) as usize)
            }
        }
    }

    /// First element at or after `from` that is not excluded.
    fn first_free(&self, from: usize, excluded: &BTreeSet<u32>) -> Option<u32> {
        match self {
            IndexStream::List { items } => items
                .iter()
                .skip(from)
                .copied()
                .find(|i| !excluded.contains(i)),
            IndexStream::Arith { .. } => (from..)
                .map_while(|p| self.get(p))
                .find(|i| !excluded.contains(i)),
        }
    }

    /// Last non-excluded element of a finite stream.
    fn last_free(&self, excluded: &BTreeSet<u32>) -> Option<u32> {
        match self {
            IndexStream::List { items } => {
                items.iter().rev().copied().find(|i| !excluded.contains(i))
            }
            IndexStream::Arith { .. } => None,
        }
    }

    fn validate(&self, name: &str) -> Result<()> {
        match self {
            IndexStream::List { items } => {
                if items.contains(&0) {
                    return Err(Error::InvalidOrder(format!(
                        "{name} stream contains index 0"
                    )));
                }
                let set: BTreeSet<_> = items.iter().collect();
                if set.len() != items.len() {
                    return Err(Error::InvalidOrder(format!(
                        "{name} stream repeats an index"
                    )));
                }
            }
            IndexStream::Arith { start, step } => {
                if *start == 0 || *step == 0 {
                    return Err(Error::InvalidOrder(format!(
                        "{name} progression needs start >= 1 and step >= 1"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Top(usize),
    Bottom(usize),
}

/// A linear order on `{ε_i}` built from a descending `top` stream and an
/// ascending `bottom` stream, tagged with the root system it is used for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderSpec {
    pub system: SystemType,
    pub top: IndexStream,
    pub bottom: IndexStream,
}

#[derive(Deserialize)]
struct RawOrder {
    system: SystemType,
    top: IndexStream,
    #[serde(default = "IndexStream::empty")]
    bottom: IndexStream,
}

impl<'de> Deserialize<'de> for OrderSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<OrderSpec, D::Error> {
        let raw = RawOrder::deserialize(d)?;
        OrderSpec::new(raw.system, raw.top, raw.bottom).map_err(serde::de::Error::custom)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl OrderSpec {
    pub fn new(system: SystemType, top: IndexStream, bottom: IndexStream) -> Result<Self> {
        let order = OrderSpec {
            system,
            top,
            bottom,
        };
        order.validate()?;
        Ok(order)
    }

    /// `ε_1 ≻ ε_2 ≻ ε_3 ≻ …`
    pub fn natural(system: SystemType) -> Self {
        OrderSpec::new(system, IndexStream::arith(1, 1), IndexStream::empty()).unwrap()
    }

    /// `… ≻ ε_3 ≻ ε_2 ≻ ε_1`
    pub fn reverse(system: SystemType) -> Self {
        OrderSpec::new(system, IndexStream::empty(), IndexStream::arith(1, 1)).unwrap()
    }

    /// `ε_1 ≻ ε_3 ≻ ε_5 ≻ … ≻ ε_6 ≻ ε_4 ≻ ε_2`
    pub fn interleaved(system: SystemType) -> Self {
        OrderSpec::new(system, IndexStream::arith(1, 2), IndexStream::arith(2, 2)).unwrap()
    }

    /// The standard order `ε_1 ≻ … ≻ ε_n` of a finite-rank system.
    pub fn finite(system: SystemType, n: u32) -> Self {
        OrderSpec::new(system, IndexStream::list(1..=n), IndexStream::empty()).unwrap()
    }

    pub fn is_finite(&self) -> bool {
        self.top.len().is_some() && self.bottom.len().is_some()
    }

    fn validate(&self) -> Result<()> {
        self.top.validate("top")?;
        self.bottom.validate("bottom")?;
        let covered = |n: u32| {
            self.top.position(n).is_some() as u32 + self.bottom.position(n).is_some() as u32
        };
        if self.is_finite() {
            let total = self.top.len().unwrap() + self.bottom.len().unwrap();
            for n in 1..=total as u32 {
                if covered(n) != 1 {
                    return Err(Error::InvalidOrder(format!(
                        "finite order must cover 1..={total} exactly once; index {n} covered {} times",
                        covered(n)
                    )));
                }
            }
            return Ok(());
        }
        let mut period = 1u64;
        let mut bound = 0u64;
        for s in [&self.top, &self.bottom] {
            match s {
                IndexStream::Arith { start, step } => {
                    period = period / gcd(period, *step as u64) * *step as u64;
                    bound = bound.max(*start as u64);
                }
                IndexStream::List { items } => {
                    bound = bound.max(items.iter().copied().max().unwrap_or(0) as u64);
                }
            }
        }
        // Beyond `bound` coverage is periodic with period `period`.
        let limit = bound + period;
        if limit > 10_000_000 {
            return Err(Error::InvalidOrder(
                "order description too large to validate".into(),
            ));
        }
        for n in 1..=limit as u32 {
            match covered(n) {
                1 => {}
                0 => return Err(Error::InvalidOrder(format!("index {n} is not covered"))),
                _ => {
                    return Err(Error::InvalidOrder(format!(
                        "index {n} appears in both streams"
                    )))
                }
            }
        }
        Ok(())
    }

    fn slot(&self, i: u32) -> Result<Slot> {
        if let Some(p) = self.top.position(i) {
            Ok(Slot::Top(p))
        } else if let Some(p) = self.bottom.position(i) {
            Ok(Slot::Bottom(p))
        } else {
            Err(Error::IndexNotCovered(i))
        }
    }

    pub fn contains(&self, i: u32) -> bool {
        self.slot(i).is_ok()
    }

    /// Compare `ε_i` with `ε_j`; `Greater` means `ε_i ≻ ε_j`.
    pub fn compare(&self, i: u32, j: u32) -> Result<Ordering> {
        if i == 0 || j == 0 {
            return Err(Error::IndexNotCovered(0));
        }
        Ok(match (self.slot(i)?, self.slot(j)?) {
            (Slot::Top(a), Slot::Top(b)) => b.cmp(&a),
            (Slot::Bottom(a), Slot::Bottom(b)) => a.cmp(&b),
            (Slot::Top(_), Slot::Bottom(_)) => Ordering::Greater,
            (Slot::Bottom(_), Slot::Top(_)) => Ordering::Less,
        })
    }

    pub fn greater(&self, i: u32, j: u32) -> Result<bool> {
        Ok(self.compare(i, j)? == Ordering::Greater)
    }

    /// The `≻`-maximal index outside `excluded`, if one exists.
    pub fn max_remaining(&self, excluded: &BTreeSet<u32>) -> Option<u32> {
        self.top
            .first_free(0, excluded)
            .or_else(|| self.bottom.last_free(excluded))
    }

    /// The `≻`-minimal index outside `excluded`, if one exists.
    pub fn min_remaining(&self, excluded: &BTreeSet<u32>) -> Option<u32> {
        self.bottom
            .first_free(0, excluded)
            .or_else(|| self.top.last_free(excluded))
    }

    pub fn max_element(&self) -> Option<u32> {
        self.max_remaining(&BTreeSet::new())
    }

    pub fn min_element(&self) -> Option<u32> {
        self.min_remaining(&BTreeSet::new())
    }

    /// `|{s : ε_s ⪰ ε_i}|`, `None` when infinite.
    pub fn count_at_or_above(&self, i: u32) -> Result<Option<usize>> {
        Ok(match self.slot(i)? {
            Slot::Top(p) => Some(p + 1),
            Slot::Bottom(p) => match (self.top.len(), self.bottom.len()) {
                (Some(t), Some(b)) => Some(t + b - p),
                _ => None,
            },
        })
    }

    /// `|{s : ε_i ⪰ ε_s}|`, `None` when infinite.
    pub fn count_at_or_below(&self, i: u32) -> Result<Option<usize>> {
        Ok(match self.slot(i)? {
            Slot::Bottom(p) => Some(p + 1),
            Slot::Top(p) => match (self.top.len(), self.bottom.len()) {
                (Some(t), Some(b)) => Some(t - p + b),
                _ => None,
            },
        })
    }

    /// Immediate neighbours `(above, below)` of `ε_i`, when they exist.
    pub fn neighbors(&self, i: u32) -> Result<(Option<u32>, Option<u32>)> {
        let last = |s: &IndexStream| {
            s.len()
                .and_then(|l| l.checked_sub(1))
                .and_then(|p| s.get(p))
        };
        Ok(match self.slot(i)? {
            Slot::Top(p) => {
                let above = p.checked_sub(1).and_then(|q| self.top.get(q));
                let below = match self.top.len() {
                    Some(l) if l == p + 1 => last(&self.bottom),
                    _ => self.top.get(p + 1),
                };
                (above, below)
            }
            Slot::Bottom(p) => {
                let below = p.checked_sub(1).and_then(|q| self.bottom.get(q));
                let above = match self.bottom.len() {
                    Some(l) if l == p + 1 => last(&self.top),
                    _ => self.bottom.get(p + 1),
                };
                (above, below)
            }
        })
    }

    /// Indices sorted by the order, largest first.
    pub fn sort_desc(&self, indices: &[u32]) -> Result<Vec<u32>> {
        for &i in indices {
            self.slot(i)?;
        }
        let mut v = indices.to_vec();
        v.sort_by(|a, b| self.compare(*b, *a).unwrap());
        v.dedup();
        Ok(v)
    }

    /// Whether `root` is a positive root of this (infinite) system.
    pub fn is_positive(&self, root: &Root) -> Result<bool> {
        if !root.allowed_in(self.system) {
            return Ok(false);
        }
        match *root {
            Root::Diff(i, j) => self.greater(i, j),
            _ => {
                for i in root.indices() {
                    self.slot(i)?;
                }
                Ok(true)
            }
        }
    }

    /// The first `count` indices of the order's streams, top first.
    pub fn prefix_indices(&self, count: usize) -> Vec<u32> {
        let mut out = Vec::new();
        let mut p = 0;
        while out.len() < count {
            let a = self.top.get(p);
            let b = self.bottom.get(p);
            if a.is_none() && b.is_none() {
                break;
            }
            out.extend(a);
            if out.len() < count {
                out.extend(b);
            }
            p += 1;
        }
        out
    }
}

/// A finite set of indices `M`, sorted so that `labels[k − 1] = j_M(k)`
/// (the `k`-th largest index of `M` in the order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    labels: Vec<u32>,
}

impl Window {
    pub fn new(order: &OrderSpec, indices: impl IntoIterator<Item = u32>) -> Result<Window> {
        let idx: Vec<u32> = indices.into_iter().collect();
        if idx.is_empty() {
            return Err(Error::InvalidWindow("empty window".into()));
        }
        let labels = order.sort_desc(&idx)?;
        Ok(Window { labels })
    }

    /// `{1, …, n}` in its natural order.
    pub fn standard(n: usize) -> Window {
        Window {
            labels: (1..=n as u32).collect(),
        }
    }

    /// A window given directly by its labels, largest first.
    pub fn from_sorted(labels: Vec<u32>) -> Result<Window> {
        let set: BTreeSet<_> = labels.iter().collect();
        if labels.is_empty() || set.len() != labels.len() || labels.contains(&0) {
            return Err(Error::InvalidWindow(format!("{labels:?}")));
        }
        Ok(Window { labels })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn contains(&self, i: u32) -> bool {
        self.labels.contains(&i)
    }

    /// `j_M(k)` for `1 ≤ k ≤ n`.
    pub fn relabel(&self, k: u32) -> Option<u32> {
        self.labels.get((k as usize).checked_sub(1)?).copied()
    }

    /// `j_M^{-1}(i)`.
    pub fn position(&self, i: u32) -> Option<u32> {
        self.labels
            .iter()
            .position(|&x| x == i)
            .map(|p| p as u32 + 1)
    }

    /// Is `ε_i ≻ ε_j` within the window?
    pub fn greater(&self, i: u32, j: u32) -> Option<bool> {
        Some(self.position(i)? < self.position(j)?)
    }

    pub fn to_standard(&self, root: &Root) -> Result<Root> {
        let pos = |i: u32| {
            self.position(i).ok_or_else(|| {
                Error::InvalidWindow(format!("index {i} not in window {:?}", self.labels))
            })
        };
        match *root {
            Root::Diff(i, j) => {
                let (a, b) = (pos(i)?, pos(j)?);
                if a > b {
                    return Err(Error::NotPositive {
                        root: *root,
                        context: format!("window {:?}", self.labels),
                    });
                }
                Root::diff(a, b)
            }
            Root::Sum(i, j) => Root::sum(pos(i)?, pos(j)?),
            Root::Double(i) => Root::double(pos(i)?),
            Root::Short(i) => Root::short(pos(i)?),
        }
    }

    pub fn from_standard(&self, root: &Root) -> Result<Root> {
        let lab = |k: u32| {
            self.relabel(k).ok_or_else(|| {
                Error::InvalidWindow(format!("position {k} beyond window rank {}", self.rank()))
            })
        };
        match *root {
            Root::Diff(i, j) => Root::diff(lab(i)?, lab(j)?),
            Root::Sum(i, j) => Root::sum(lab(i)?, lab(j)?),
            Root::Double(i) => Root::double(lab(i)?),
            Root::Short(i) => Root::short(lab(i)?),
        }
        .and_then(Root::check_canonical)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn positive_root_examples() {
        let a3 = positive_roots(SystemType::A, 3).unwrap();
        assert_eq!(
            a3,
            vec![Root::Diff(1, 2), Root::Diff(1, 3), Root::Diff(2, 3)]
        );
        let c2 = positive_roots(SystemType::C, 2).unwrap();
        assert_eq!(
            c2,
            vec![
                Root::Diff(1, 2),
                Root::Sum(1, 2),
                Root::Double(1),
                Root::Double(2)
            ]
        );
        let d2 = positive_roots(SystemType::D, 2).unwrap();
        assert_eq!(d2, vec![Root::Diff(1, 2), Root::Sum(1, 2)]);
        assert!(positive_roots(SystemType::D, 1).is_err());
    }

    #[test]
    fn positive_root_counts() {
        for n in 2..8usize {
            assert_eq!(
                positive_roots(SystemType::A, n).unwrap().len(),
                n * (n - 1) / 2
            );
            assert_eq!(positive_roots(SystemType::B, n).unwrap().len(), n * n);
            assert_eq!(positive_roots(SystemType::C, n).unwrap().len(), n * n);
            assert_eq!(positive_roots(SystemType::D, n).unwrap().len(), n * (n - 1));
        }
    }

    #[test]
    fn root_grammar() {
        for s in ["e1-e2", "e3+e10", "2e4", "e7"] {
            assert_eq!(s.parse::<Root>().unwrap().to_string(), s);
        }
        assert_eq!("e5+e2".parse::<Root>().unwrap(), Root::Sum(2, 5));
        for bad in ["e1-e1", "e0", "2e", "x1", "e1*e2", "e-1", ""] {
            assert!(bad.parse::<Root>().is_err(), "{bad}");
        }
    }

    #[test]
    fn interleaved_compare() {
        let o = OrderSpec::interleaved(SystemType::A);
        assert_eq!(o.compare(1, 3).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(4, 2).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(5, 5).unwrap(), Ordering::Equal);
        assert_eq!(o.compare(1001, 1000).unwrap(), Ordering::Greater);
        assert_eq!(o.max_element(), Some(1));
        assert_eq!(o.min_element(), Some(2));
    }

    #[test]
    fn max_min_remaining() {
        let o = OrderSpec::natural(SystemType::A);
        assert_eq!(o.max_remaining(&[1, 2].into()), Some(3));
        assert_eq!(o.min_remaining(&BTreeSet::new()), None);
        let r = OrderSpec::reverse(SystemType::C);
        assert_eq!(r.max_element(), None);
        assert_eq!(r.min_remaining(&[1].into()), Some(2));
        let f = OrderSpec::finite(SystemType::B, 3);
        assert_eq!(f.min_remaining(&[3].into()), Some(2));
        let single = OrderSpec::new(
            SystemType::D,
            IndexStream::list([4]),
            IndexStream::Arith { start: 1, step: 1 },
        );
        assert!(single.is_err(), "4 would be covered twice");
        let single = OrderSpec::new(
            SystemType::D,
            IndexStream::list([1]),
            IndexStream::arith(2, 1),
        )
        .unwrap();
        assert_eq!(single.max_element(), Some(1));
        assert_eq!(single.max_remaining(&[1].into()), None);
    }

    #[test]
    fn partition_violations_rejected() {
        assert!(OrderSpec::new(
            SystemType::A,
            IndexStream::arith(1, 2),
            IndexStream::empty()
        )
        .is_err());
        assert!(OrderSpec::new(
            SystemType::A,
            IndexStream::arith(1, 2),
            IndexStream::arith(1, 2)
        )
        .is_err());
        assert!(OrderSpec::new(
            SystemType::A,
            IndexStream::list([1, 3]),
            IndexStream::list([2])
        )
        .is_ok());
        assert!(OrderSpec::new(
            SystemType::A,
            IndexStream::list([1, 3]),
            IndexStream::list([4])
        )
        .is_err());
        assert!(OrderSpec::new(
            SystemType::A,
            IndexStream::list([2, 1, 2]),
            IndexStream::empty()
        )
        .is_err());
        let o = OrderSpec::natural(SystemType::A);
        assert!(o.compare(0, 1).is_err());
    }

    #[test]
    fn counts() {
        let o = OrderSpec::natural(SystemType::A);
        assert_eq!(o.count_at_or_above(3).unwrap(), Some(3));
        assert_eq!(o.count_at_or_below(3).unwrap(), None);
        let i = OrderSpec::interleaved(SystemType::A);
        assert_eq!(i.count_at_or_below(4).unwrap(), Some(2));
        assert_eq!(i.count_at_or_above(4).unwrap(), None);
        let f = OrderSpec::finite(SystemType::A, 5);
        assert_eq!(f.count_at_or_below(2).unwrap(), Some(4));
    }

    #[test]
    fn window_relabel() {
        let o = OrderSpec::interleaved(SystemType::A);
        let w = Window::new(&o, [2, 3, 4, 1]).unwrap();
        assert_eq!(w.labels(), &[1, 3, 4, 2]);
        assert_eq!(w.relabel(1), Some(1));
        assert_eq!(w.to_standard(&Root::Diff(4, 2)).unwrap(), Root::Diff(3, 4));
        assert_eq!(
            w.from_standard(&Root::Diff(2, 3)).unwrap(),
            Root::Diff(3, 4)
        );
        assert!(w.to_standard(&Root::Diff(2, 4)).is_err());
    }

    #[test]
    fn strong_orthogonality() {
        use SystemType::*;
        assert!(strongly_orthogonal(A, &Root::Diff(1, 4), &Root::Diff(2, 3)));
        assert!(!strongly_orthogonal(
            A,
            &Root::Diff(1, 2),
            &Root::Diff(2, 3)
        ));
        assert!(strongly_orthogonal(D, &Root::Diff(1, 2), &Root::Sum(1, 2)));
        assert!(!strongly_orthogonal(C, &Root::Diff(1, 2), &Root::Sum(1, 2)));
        assert!(strongly_orthogonal(B, &Root::Diff(1, 2), &Root::Sum(1, 2)));
        assert!(!strongly_orthogonal(B, &Root::Short(1), &Root::Diff(1, 2)));
    }

    fn arb_order() -> impl Strategy<Value = OrderSpec> {
        prop_oneof![
            Just(OrderSpec::natural(SystemType::A)),
            Just(OrderSpec::reverse(SystemType::A)),
            Just(OrderSpec::interleaved(SystemType::A)),
            Just(
                OrderSpec::new(
                    SystemType::A,
                    IndexStream::arith(2, 2),
                    IndexStream::arith(1, 2)
                )
                .unwrap()
            ),
            Just(
                OrderSpec::new(
                    SystemType::A,
                    IndexStream::arith(3, 1),
                    IndexStream::list([2, 1])
                )
                .unwrap()
            ),
        ]
    }

    proptest! {
        #[test]
        fn compare_is_a_strict_total_order(o in arb_order(), a in 1u32..60, b in 1u32..60, c in 1u32..60) {
            let ab = o.compare(a, b).unwrap();
            prop_assert_eq!(ab, o.compare(b, a).unwrap().reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab == Ordering::Greater && o.compare(b, c).unwrap() == Ordering::Greater {
                prop_assert_eq!(o.compare(a, c).unwrap(), Ordering::Greater);
            }
        }

        #[test]
        fn neighbors_are_adjacent(o in arb_order(), a in 1u32..40, c in 1u32..80) {
            let (above, below) = o.neighbors(a).unwrap();
            if let Some(x) = above {
                prop_assert!(o.greater(x, a).unwrap());
                prop_assert!(!(o.greater(x, c).unwrap() && o.greater(c, a).unwrap()));
            }
            if let Some(y) = below {
                prop_assert!(o.greater(a, y).unwrap());
                prop_assert!(!(o.greater(a, c).unwrap() && o.greater(c, y).unwrap()));
            }
            prop_assert_eq!(above.is_none(), o.max_element() == Some(a) || (o.top.position(a) == Some(0)) || (o.top.len().is_none() && o.bottom.position(a).is_some_and(|p| o.bottom.len() == Some(p + 1))));
        }

        #[test]
        fn window_relabel_preserves_order(o in arb_order(), idx in proptest::collection::btree_set(1u32..40, 1..8)) {
            let w = Window::new(&o, idx.iter().copied()).unwrap();
            for p in 1..=w.rank() as u32 {
                for q in 1..=w.rank() as u32 {
                    let (i, j) = (w.relabel(p).unwrap(), w.relabel(q).unwrap());
                    prop_assert_eq!(o.compare(i, j).unwrap(), q.cmp(&p));
                }
            }
        }
    }
}
