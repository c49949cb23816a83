use crate::automata::{minimize, Alphabet, Dfa};

/// Identifies a regular language: the canonical minimal DFA as a flat array
/// `[sigma, states, accepting..., delta...]`, states numbered breadth-first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LangKey(Box<[u16]>);

impl LangKey {
    pub fn of_dfa(d: &Dfa) -> LangKey {
        let m = minimize(d);
        let (n, sigma) = (m.state_count(), m.alphabet().len());
        let mut key = Vec::with_capacity(2 + n * (sigma + 1));
        key.push(sigma as u16);
        key.push(n as u16);
        key.extend((0..n).map(|q| m.is_accepting(q) as u16));
        for q in 0..n {
            key.extend((0..sigma).map(|s| m.next(q, s) as u16));
        }
        LangKey(key.into())
    }

    pub fn sigma(&self) -> usize {
        self.0[0] as usize
    }

    /// Number of states of the minimal DFA.
    pub fn states(&self) -> usize {
        self.0[1] as usize
    }

    /// The minimal DFA over the first `sigma` latin letters.
    pub fn to_dfa(&self) -> Dfa {
        let (sigma, n) = (self.sigma(), self.states());
        let accepting = self.0[2..2 + n].iter().map(|&a| a == 1).collect();
        let delta = self.0[2 + n..].iter().map(|&t| t as usize).collect();
        Dfa::new(Alphabet::latin(sigma).expect("key alphabet"), 0, accepting, delta).expect("key is well formed")
    }
}

/// An NFA on at most 16 states with transition images as bitmasks,
/// `trans[q * sigma + s]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct MaskNfa {
    pub n: usize,
    pub sigma: usize,
    pub init: u32,
    pub acc: u32,
    pub trans: Vec<u32>,
}

impl MaskNfa {
    pub fn image(&self, set: u32, s: usize) -> u32 {
        let mut bits = set;
        let mut out = 0;
        while bits != 0 {
            let q = bits.trailing_zeros() as usize;
            out |= self.trans[q * self.sigma + s];
            bits &= bits - 1;
        }
        out
    }

    /// Every state reachable from the initial set.
    pub fn all_reachable(&self) -> bool {
        let full = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let mut seen = self.init;
        let mut frontier = self.init;
        while frontier != 0 {
            let mut next = 0;
            for s in 0..self.sigma {
                next |= self.image(frontier, s);
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }
}

/// Reusable buffers for [`KeyScratch::key`].
#[derive(Default)]
pub(crate) struct KeyScratch {
    index: Vec<u32>,
    subsets: Vec<u32>,
    delta: Vec<u32>,
    class: Vec<u32>,
    next_class: Vec<u32>,
    order: Vec<u32>,
}

const UNSEEN: u32 = u32::MAX;

impl KeyScratch {
    /// Language key of a bitmask NFA: subset construction, Moore refinement,
    /// then breadth-first renumbering (the same numbering `minimize` produces).
    pub fn key(&mut self, a: &MaskNfa) -> LangKey {
        let sigma = a.sigma;
        self.index.clear();
        self.index.resize(1 << a.n, UNSEEN);
        self.subsets.clear();
        self.delta.clear();
        self.subsets.push(a.init);
        self.index[a.init as usize] = 0;
        let mut i = 0;
        while i < self.subsets.len() {
            let p = self.subsets[i];
            for s in 0..sigma {
                let t = a.image(p, s);
                if self.index[t as usize] == UNSEEN {
                    self.index[t as usize] = self.subsets.len() as u32;
                    self.subsets.push(t);
                }
                self.delta.push(self.index[t as usize]);
            }
            i += 1;
        }
        let n = self.subsets.len();

        // Moore refinement: classes are renumbered by first occurrence each round
        self.class.clear();
        self.class.extend(self.subsets.iter().map(|&p| (p & a.acc != 0) as u32));
        let mut classes = if self.class.iter().all(|&c| c == self.class[0]) {
            1
        } else {
            2
        };
        let mut sigs: Vec<(Vec<u32>, u32)> = Vec::new();
        loop {
            sigs.clear();
            self.next_class.clear();
            for q in 0..n {
                let mut sig = Vec::with_capacity(sigma + 1);
                sig.push(self.class[q]);
                sig.extend((0..sigma).map(|s| self.class[self.delta[q * sigma + s] as usize]));
                let c = match sigs.iter().find(|(k, _)| *k == sig) {
                    Some(&(_, c)) => c,
                    None => {
                        let c = sigs.len() as u32;
                        sigs.push((sig, c));
                        c
                    }
                };
                self.next_class.push(c);
            }
            std::mem::swap(&mut self.class, &mut self.next_class);
            if sigs.len() == classes {
                break;
            }
            classes = sigs.len();
        }

        // breadth-first numbering of classes from the initial one
        let mut id = vec![UNSEEN; classes];
        let mut rep = vec![UNSEEN; classes];
        for q in 0..n {
            let c = self.class[q] as usize;
            if rep[c] == UNSEEN {
                rep[c] = q as u32;
            }
        }
        self.order.clear();
        self.order.push(self.class[0]);
        id[self.class[0] as usize] = 0;
        let mut key = Vec::with_capacity(2 + classes * (sigma + 1));
        key.push(sigma as u16);
        key.push(classes as u16);
        let mut trans = Vec::with_capacity(classes * sigma);
        let mut i = 0;
        while i < self.order.len() {
            let q = rep[self.order[i] as usize] as usize;
            for s in 0..sigma {
                let c = self.class[self.delta[q * sigma + s] as usize];
                if id[c as usize] == UNSEEN {
                    id[c as usize] = self.order.len() as u32;
                    self.order.push(c);
                }
                trans.push(id[c as usize] as u16);
            }
            i += 1;
        }
        key.extend(
            self.order
                .iter()
                .map(|&c| (self.subsets[rep[c as usize] as usize] & a.acc != 0) as u16),
        );
        key.extend(trans);
        LangKey(key.into())
    }
}
