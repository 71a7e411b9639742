use std::collections::BTreeMap;
use std::fmt;

/// Sparse graded Betti table at ideal level: `(i, j) -> β_{i,j}(I)`.
///
/// The zero ideal is the table `{(-1, 0): 1}`. Nonzero ideals never store
/// the `(-1, 0)` entry, though formulas treat `β_{-1,0} = 1` for every ideal
/// (see [`BettiTable::quotient`]).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BettiTable {
    entries: BTreeMap<(i32, i32), u64>,
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(&(i, j), v)| (format!("({i},{j})"), v)))
            .finish()
    }
}

impl BettiTable {
    /// An empty accumulator with no entries at all.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn zero_ideal() -> Self {
        Self::from_entries([(-1, 0, 1)])
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (i32, i32, u64)>) -> Self {
        let mut t = Self::new();
        for (i, j, v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn get(&self, i: i32, j: i32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: i32, j: i32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    /// Entries as `(i, j, β_{i,j})` in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (i32, i32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.entries.len() == 1 && self.get(-1, 0) == 1
    }

    /// `max{j - i}` over entries with `i ≥ 0`; `None` for the zero ideal.
    pub fn reg(&self) -> Option<i32> {
        self.entries().filter(|e| e.0 >= 0).map(|(i, j, _)| j - i).max()
    }

    /// `max{i}` over entries with `i ≥ 0`; `None` for the zero ideal.
    pub fn pd(&self) -> Option<i32> {
        self.entries().filter(|e| e.0 >= 0).map(|(i, _, _)| i).max()
    }

    /// Regularity with the zero ideal counted as `1` (from `β_{-1,0}`).
    pub fn reg_ext(&self) -> i32 {
        self.reg().unwrap_or(1)
    }

    /// Projective dimension with the zero ideal counted as `-1`.
    pub fn pd_ext(&self) -> i32 {
        self.pd().unwrap_or(-1)
    }

    /// Quotient-level table: `β_{i,j}(R/I) = β_{i-1,j}(I)` and
    /// `β_{0,0}(R/I) = 1`.
    pub fn quotient(&self) -> BTreeMap<(i32, i32), u64> {
        let mut q = BTreeMap::new();
        q.insert((0, 0), 1);
        for (i, j, v) in self.entries() {
            if i >= 0 {
                *q.entry((i + 1, j)).or_insert(0) += v;
            }
        }
        q
    }

    /// Inverse of [`BettiTable::quotient`].
    pub fn from_quotient(q: &BTreeMap<(i32, i32), u64>) -> Self {
        let mut t = Self::new();
        for (&(i, j), &v) in q {
            if i >= 1 {
                t.add(i - 1, j, v);
            }
        }
        if t.is_empty() {
            t = Self::zero_ideal();
        }
        t
    }

    /// Entries with `i ≥ 0` (drops the zero-ideal marker).
    pub fn nonnegative_part(&self) -> Self {
        Self::from_entries(self.entries().filter(|e| e.0 >= 0))
    }

    /// `(i, j) -> (i + di, j + dj)` for entries with `i ≥ 0`.
    pub fn shifted(&self, di: i32, dj: i32) -> Self {
        Self::from_entries(self.entries().filter(|e| e.0 >= 0).map(|(i, j, v)| (i + di, j + dj, v)))
    }

    /// Entrywise sum.
    pub fn plus(&self, other: &Self) -> Self {
        let mut t = self.clone();
        for (i, j, v) in other.entries() {
            t.add(i, j, v);
        }
        t
    }

    /// `β_{i,i+d}` for `0 ≤ i ≤ i_max`.
    pub fn strand(&self, d: i32, i_max: usize) -> Vec<u64> {
        (0..=i_max as i32).map(|i| self.get(i, i + d)).collect()
    }

    /// Whether every entry with `i ≥ 0` lies in one strand `j = i + d`.
    pub fn is_linear(&self) -> bool {
        let mut offsets = self.entries().filter(|e| e.0 >= 0).map(|(i, j, _)| j - i);
        match offsets.next() {
            None => false,
            Some(d) => offsets.all(|o| o == d),
        }
    }

    /// Largest `p` with `β_{i,j} = 0` for all `i < p`, `j > i + 2`; `None`
    /// when no such entry exists at all (linear resolution).
    pub fn n2p(&self) -> Option<i32> {
        self.entries()
            .filter(|&(i, j, _)| i >= 0 && j > i + 2)
            .map(|(i, _, _)| i)
            .min()
    }

    /// Macaulay2-style diagram: columns `i`, rows `j - i`, `.` for zero.
    pub fn render_diagram(&self) -> String {
        if self.entries.is_empty() {
            return String::new();
        }
        let i_min = self.entries.keys().map(|k| k.0).min().unwrap();
        let i_max = self.entries.keys().map(|k| k.0).max().unwrap();
        let r_min = self.entries.keys().map(|k| k.1 - k.0).min().unwrap();
        let r_max = self.entries.keys().map(|k| k.1 - k.0).max().unwrap();
        let cols: Vec<i32> = (i_min..=i_max).collect();
        let totals: Vec<u64> = cols
            .iter()
            .map(|&i| self.entries().filter(|e| e.0 == i).map(|e| e.2).sum())
            .collect();
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push(("total:".into(), totals.iter().map(|t| t.to_string()).collect()));
        for r in r_min..=r_max {
            let cells = cols
                .iter()
                .map(|&i| match self.get(i, i + r) {
                    0 => ".".to_string(),
                    v => v.to_string(),
                })
                .collect();
            rows.push((format!("{r}:"), cells));
        }
        let label_w = rows.iter().map(|r| r.0.len()).max().unwrap();
        let widths: Vec<usize> = cols
            .iter()
            .enumerate()
            .map(|(c, i)| {
                rows.iter()
                    .map(|r| r.1[c].len())
                    .max()
                    .unwrap()
                    .max(i.to_string().len())
            })
            .collect();
        let mut out = String::new();
        let header: Vec<String> = cols
            .iter()
            .zip(&widths)
            .map(|(i, w)| format!("{i:>w$}"))
            .collect();
        out.push_str(format!("{:label_w$} {}\n", "", header.join(" ")).trim_end());
        out.push('\n');
        for (label, cells) in rows {
            let cells: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            out.push_str(&format!("{label:>label_w$} {}\n", cells.join(" ")));
        }
        out
    }

    /// `{"schema":1,"betti":[{"i":..,"j":..,"value":..}],"reg":..,"pd":..}`.
    pub fn to_json(&self) -> serde_json::Value {
        let betti: Vec<serde_json::Value> = self
            .entries()
            .map(|(i, j, v)| serde_json::json!({"i": i, "j": j, "value": v}))
            .collect();
        serde_json::json!({
            "schema": 1,
            "betti": betti,
            "reg": self.reg(),
            "pd": self.pd(),
        })
    }
}
