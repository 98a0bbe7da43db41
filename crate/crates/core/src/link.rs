//! Oriented blackboard-framed link diagrams as signed Gauss codes.
//!
//! Each component is the cyclic sequence of crossing visits met while
//! travelling along it. A visit records the crossing id, whether the
//! component passes over or under there, and the crossing sign. Virtual
//! crossings impose no relation and are simply not recorded, so any
//! well-formed code, planar or not, describes a (virtual) link.
//!
//! Text format: components separated by `|`, visits separated by `,`, a visit
//! is `O` or `U`, a decimal id and `+` or `-`. The token `0` is a
//! crossingless component. Whitespace is ignored.
//!
//! ```
//! use rackinv_core::GaussDiagram;
//!
//! let hopf: GaussDiagram = "O1+,U2+ | U1+,O2+".parse().unwrap();
//! assert_eq!(hopf.self_writhe(), vec![0, 0]);
//! assert_eq!(hopf.linking_number(0, 1), Ok(1));
//! ```

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Visit {
    pub crossing: u32,
    pub role: Role,
    pub sign: Sign,
}

impl Visit {
    pub fn over(crossing: u32, sign: Sign) -> Self {
        Visit {
            crossing,
            role: Role::Over,
            sign,
        }
    }

    pub fn under(crossing: u32, sign: Sign) -> Self {
        Visit {
            crossing,
            role: Role::Under,
            sign,
        }
    }
}

impl fmt::Display for Visit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let role = match self.role {
            Role::Over => 'O',
            Role::Under => 'U',
        };
        let sign = match self.sign {
            Sign::Positive => '+',
            Sign::Negative => '-',
        };
        write!(f, "{role}{}{sign}", self.crossing)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("empty link description")]
    Empty,
    #[error("component {component}, visit {position}: malformed token {token:?}")]
    Token {
        component: usize,
        position: usize,
        token: String,
    },
    #[error("crossing {crossing} has no {role:?} visit")]
    MissingVisit { crossing: u32, role: Role },
    #[error("crossing {crossing} has more than one {role:?} visit")]
    DuplicateVisit { crossing: u32, role: Role },
    #[error("crossing {crossing} carries different signs at its two visits")]
    SignMismatch { crossing: u32 },
    #[error("component index {0} out of range")]
    NoSuchComponent(usize),
    #[error("components {i} and {j} share an odd number of crossings")]
    OddLinking { i: usize, j: usize },
    #[error("linking number needs two distinct components")]
    SameComponent,
    #[error("crossing ids exhausted")]
    TooManyCrossings,
}

/// Where a crossing sits: the over and under components and its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingInfo {
    pub over_component: usize,
    pub under_component: usize,
    pub sign: Sign,
}

/// A validated signed Gauss diagram. Component order is significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    components: Vec<Vec<Visit>>,
}

impl GaussDiagram {
    /// Validates that every crossing is visited exactly once over and once
    /// under, with matching signs.
    pub fn new(components: Vec<Vec<Visit>>) -> Result<Self, LinkError> {
        if components.is_empty() {
            return Err(LinkError::Empty);
        }
        let mut seen: BTreeMap<u32, (Option<Sign>, Option<Sign>)> = BTreeMap::new();
        for visit in components.iter().flatten() {
            let entry = seen.entry(visit.crossing).or_default();
            let slot = match visit.role {
                Role::Over => &mut entry.0,
                Role::Under => &mut entry.1,
            };
            if slot.is_some() {
                return Err(LinkError::DuplicateVisit {
                    crossing: visit.crossing,
                    role: visit.role,
                });
            }
            *slot = Some(visit.sign);
        }
        for (&crossing, &(over, under)) in &seen {
            match (over, under) {
                (None, _) => {
                    return Err(LinkError::MissingVisit {
                        crossing,
                        role: Role::Over,
                    })
                }
                (_, None) => {
                    return Err(LinkError::MissingVisit {
                        crossing,
                        role: Role::Under,
                    })
                }
                (Some(a), Some(b)) if a != b => return Err(LinkError::SignMismatch { crossing }),
                _ => {}
            }
        }
        Ok(GaussDiagram { components })
    }

    /// The crossingless unlink with `c` components.
    pub fn unlink(c: usize) -> Self {
        GaussDiagram {
            components: vec![Vec::new(); c.max(1)],
        }
    }

    pub fn components(&self) -> &[Vec<Visit>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn max_crossing_id(&self) -> u32 {
        self.components
            .iter()
            .flatten()
            .map(|v| v.crossing)
            .max()
            .unwrap_or(0)
    }

    /// Per-crossing placement, keyed by crossing id.
    pub fn crossings(&self) -> BTreeMap<u32, CrossingInfo> {
        let mut over = BTreeMap::new();
        let mut under = BTreeMap::new();
        for (c, comp) in self.components.iter().enumerate() {
            for v in comp {
                match v.role {
                    Role::Over => over.insert(v.crossing, (c, v.sign)),
                    Role::Under => under.insert(v.crossing, (c, v.sign)),
                };
            }
        }
        over.into_iter()
            .map(|(id, (oc, sign))| {
                (
                    id,
                    CrossingInfo {
                        over_component: oc,
                        under_component: under[&id].0,
                        sign,
                    },
                )
            })
            .collect()
    }

    /// Sum of signs of the crossings of each component with itself.
    pub fn self_writhe(&self) -> Vec<i64> {
        let mut sw = vec![0; self.components.len()];
        for info in self.crossings().values() {
            if info.over_component == info.under_component {
                sw[info.over_component] += info.sign.value();
            }
        }
        sw
    }

    /// Signed crossing count.
    pub fn total_writhe(&self) -> i64 {
        self.crossings().values().map(|c| c.sign.value()).sum()
    }

    /// Half the signed count of crossings between components `i` and `j`
    /// (0-based).
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64, LinkError> {
        let c = self.components.len();
        if i >= c {
            return Err(LinkError::NoSuchComponent(i));
        }
        if j >= c {
            return Err(LinkError::NoSuchComponent(j));
        }
        if i == j {
            return Err(LinkError::SameComponent);
        }
        let mut count = 0usize;
        let mut signed = 0i64;
        for info in self.crossings().values() {
            let pair = (info.over_component, info.under_component);
            if pair == (i, j) || pair == (j, i) {
                count += 1;
                signed += info.sign.value();
            }
        }
        if count % 2 == 1 {
            return Err(LinkError::OddLinking { i, j });
        }
        Ok(signed / 2)
    }

    /// Splits each component into arcs at its under visits.
    pub fn arcs(&self) -> ArcIndexing {
        let mut component_arcs = Vec::with_capacity(self.components.len());
        let mut over = BTreeMap::new();
        let mut under = BTreeMap::new();
        let mut signs = BTreeMap::new();
        let mut next = 0;
        for comp in &self.components {
            let unders = comp.iter().filter(|v| v.role == Role::Under).count();
            let k = unders.max(1);
            let base = next;
            next += k;
            component_arcs.push(base..next);
            // arc j begins right after the j-th under visit; before the first
            // under visit we are still on the last arc
            let mut seen_unders = 0usize;
            for v in comp {
                signs.insert(v.crossing, v.sign);
                match v.role {
                    Role::Over => {
                        let arc = (seen_unders + k - 1) % k;
                        over.insert(v.crossing, base + arc);
                    }
                    Role::Under => {
                        let inbound = (seen_unders + k - 1) % k;
                        let outbound = seen_unders;
                        under.insert(v.crossing, (base + inbound, base + outbound));
                        seen_unders += 1;
                    }
                }
            }
        }
        let crossings = signs
            .into_iter()
            .map(|(id, sign)| {
                let (under_in, under_out) = under[&id];
                CrossingArcs {
                    id,
                    sign,
                    over: over[&id],
                    under_in,
                    under_out,
                }
            })
            .collect();
        ArcIndexing {
            arc_count: next,
            component_arcs,
            crossings,
        }
    }

    /// Inserts `k` positive kinks (`O id+, U id+` with fresh ids) at the start
    /// of `component`, raising its self-writhe by `k`.
    pub fn add_kinks(&self, component: usize, k: u64) -> Result<GaussDiagram, LinkError> {
        if component >= self.components.len() {
            return Err(LinkError::NoSuchComponent(component));
        }
        let fits = |d: &GaussDiagram| d.max_crossing_id() as u64 + k <= u32::MAX as u64;
        let mut out = self.clone();
        if !fits(&out) {
            out = out.renumbered();
            if !fits(&out) {
                return Err(LinkError::TooManyCrossings);
            }
        }
        let first = out.max_crossing_id() + 1;
        let kinks = (0..k as u32).flat_map(|t| {
            [
                Visit::over(first + t, Sign::Positive),
                Visit::under(first + t, Sign::Positive),
            ]
        });
        out.components[component].splice(0..0, kinks);
        Ok(out)
    }

    /// Relabels crossings `1..=crossing_count` in order of their old ids.
    fn renumbered(&self) -> GaussDiagram {
        let ids: BTreeMap<u32, u32> = self
            .crossings()
            .keys()
            .enumerate()
            .map(|(i, &id)| (id, i as u32 + 1))
            .collect();
        let components = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| Visit {
                        crossing: ids[&v.crossing],
                        ..*v
                    })
                    .collect()
            })
            .collect();
        GaussDiagram { components }
    }

    /// Cyclically rotates the visit sequence of `component` left by `by`.
    pub fn rotate(&self, component: usize, by: usize) -> Result<GaussDiagram, LinkError> {
        let mut out = self.clone();
        let comp = out
            .components
            .get_mut(component)
            .ok_or(LinkError::NoSuchComponent(component))?;
        if !comp.is_empty() {
            let by = by % comp.len();
            comp.rotate_left(by);
        }
        Ok(out)
    }

    /// One diagram for every writhe vector `w ∈ (Z_N)^c`, in lexicographic
    /// order of `w`: component `i` receives `(w_i - sw_i) mod N` positive
    /// kinks.
    pub fn framing_representatives(&self, rank: u64) -> Vec<(WritheVector, GaussDiagram)> {
        assert!(rank >= 1, "rack rank is at least 1");
        let sw = self.self_writhe();
        WritheVector::all(rank, self.components.len())
            .map(|w| {
                let mut d = self.clone();
                for (i, (&target, &current)) in w.entries().iter().zip(&sw).enumerate() {
                    let k = (target as i128 - current as i128).rem_euclid(rank as i128) as u64;
                    if k > 0 {
                        d = d
                            .add_kinks(i, k)
                            .expect("component exists and kink ids fit");
                    }
                }
                (w, d)
            })
            .collect()
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            if comp.is_empty() {
                f.write_str("0")?;
            }
            for (k, v) in comp.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GaussDiagram {
    type Err = LinkError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(LinkError::Empty);
        }
        let mut components = Vec::new();
        for (ci, part) in compact.split('|').enumerate() {
            if part == "0" {
                components.push(Vec::new());
                continue;
            }
            let mut comp = Vec::new();
            for (pi, token) in part.split(',').enumerate() {
                let bad = || LinkError::Token {
                    component: ci + 1,
                    position: pi + 1,
                    token: token.to_string(),
                };
                comp.push(parse_visit(token).ok_or_else(bad)?);
            }
            components.push(comp);
        }
        GaussDiagram::new(components)
    }
}

fn parse_visit(token: &str) -> Option<Visit> {
    let mut chars = token.chars();
    let role = match chars.next()? {
        'O' | 'o' => Role::Over,
        'U' | 'u' => Role::Under,
        _ => return None,
    };
    let sign = match chars.next_back()? {
        '+' => Sign::Positive,
        '-' => Sign::Negative,
        _ => return None,
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let crossing: u32 = digits.parse().ok()?;
    if crossing == 0 {
        return None;
    }
    Some(Visit {
        crossing,
        role,
        sign,
    })
}

/// Arcs of a diagram: maximal segments between consecutive under visits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcIndexing {
    pub arc_count: usize,
    /// Arc ids belonging to each component.
    pub component_arcs: Vec<Range<usize>>,
    /// One entry per crossing, sorted by crossing id.
    pub crossings: Vec<CrossingArcs>,
}

/// The three arcs meeting at a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingArcs {
    pub id: u32,
    pub sign: Sign,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

/// A framing class `w ∈ (Z_N)^c`, residues in `0..N`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WritheVector {
    entries: Vec<u64>,
}

impl WritheVector {
    /// Reduces each entry into `0..rank`.
    pub fn new(rank: u64, entries: &[i64]) -> Self {
        WritheVector {
            entries: entries
                .iter()
                .map(|&e| (e as i128).rem_euclid(rank as i128) as u64)
                .collect(),
        }
    }

    pub fn zero(c: usize) -> Self {
        WritheVector {
            entries: vec![0; c],
        }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// All of `(Z_rank)^c` in lexicographic order.
    pub fn all(rank: u64, c: usize) -> impl Iterator<Item = WritheVector> {
        let total = (rank as u128)
            .checked_pow(c as u32)
            .expect("too many framings");
        (0..total).map(move |mut code| {
            let mut entries = vec![0u64; c];
            for slot in entries.iter_mut().rev() {
                *slot = (code % rank as u128) as u64;
                code /= rank as u128;
            }
            WritheVector { entries }
        })
    }
}

impl fmt::Display for WritheVector {
    /// `(w1,...,wc)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}
