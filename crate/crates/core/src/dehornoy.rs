//! The Dehornoy order on `B_n`.
//!
//! A braid is positive when some word for it contains `a_i` but neither
//! `a_i^{-1}` nor any `a_j^{±1}` with `j < i`. Signs are decided by handle
//! reduction; the Garside normal form settles the easy cases (identity,
//! positive and negative braids) and supplies the input word otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::garside::{to_normal_form, GarsideNormalForm};
use crate::word::BraidWord;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrderSign {
    Negative,
    Zero,
    Positive,
}

impl OrderSign {
    pub fn reverse(self) -> OrderSign {
        match self {
            OrderSign::Negative => OrderSign::Positive,
            OrderSign::Zero => OrderSign::Zero,
            OrderSign::Positive => OrderSign::Negative,
        }
    }

    /// `LT`, `EQ`, `GT` when read as the result of `compare(u, v)`, i.e. the
    /// relation of `u` to `v`.
    pub fn as_relation(self) -> &'static str {
        match self {
            OrderSign::Negative => "GT",
            OrderSign::Zero => "EQ",
            OrderSign::Positive => "LT",
        }
    }
}

const NIL: u32 = u32::MAX;

/// Full handle reduction over a doubly linked list of letters.
///
/// The scan moves left to right. For each processed node it stores, per
/// generator index `j`, the last node whose letter index is `<= j`; a node
/// closes a handle exactly when that entry, taken from its predecessor,
/// holds the inverse letter. Handles are therefore found in order of their
/// closing letter, so each one found has a handle-free interior. After a
/// reduction the scan resumes just before the handle's opening letter.
struct Reducer<'a> {
    letter: Vec<i32>,
    prev: Vec<u32>,
    next: Vec<u32>,
    /// `seen[node * width + (j - 1)]`
    seen: Vec<u32>,
    free: Vec<u32>,
    width: usize,
    head: u32,
    len: usize,
    steps: u64,
    limits: &'a Limits,
}

impl<'a> Reducer<'a> {
    fn new(strands: usize, letters: &[i32], limits: &'a Limits) -> Self {
        let width = strands.saturating_sub(1).max(1);
        // node 0 is the sentinel head
        let mut r = Reducer {
            letter: vec![0],
            prev: vec![NIL],
            next: vec![NIL],
            seen: vec![NIL; width],
            free: Vec::new(),
            width,
            head: 0,
            len: 0,
            steps: 0,
            limits,
        };
        let mut tail = r.head;
        for &x in letters {
            tail = r.insert_after(tail, x);
        }
        r
    }

    fn alloc(&mut self, x: i32) -> u32 {
        if let Some(id) = self.free.pop() {
            self.letter[id as usize] = x;
            id
        } else {
            let id = self.letter.len() as u32;
            self.letter.push(x);
            self.prev.push(NIL);
            self.next.push(NIL);
            self.seen.extend(std::iter::repeat_n(NIL, self.width));
            id
        }
    }

    fn insert_after(&mut self, at: u32, x: i32) -> u32 {
        let id = self.alloc(x);
        let after = self.next[at as usize];
        self.prev[id as usize] = at;
        self.next[id as usize] = after;
        self.next[at as usize] = id;
        if after != NIL {
            self.prev[after as usize] = id;
        }
        self.len += 1;
        id
    }

    fn remove(&mut self, id: u32) {
        let (p, n) = (self.prev[id as usize], self.next[id as usize]);
        self.next[p as usize] = n;
        if n != NIL {
            self.prev[n as usize] = p;
        }
        self.free.push(id);
        self.len -= 1;
    }

    fn seen_at(&self, node: u32, index: usize) -> u32 {
        self.seen[node as usize * self.width + index - 1]
    }

    /// Reduces the handle opened by `open` and closed by `close`; returns the
    /// node before the opener, from which scanning resumes.
    fn reduce(&mut self, open: u32, close: u32) -> Result<u32> {
        self.steps += 1;
        if self.steps > self.limits.step_budget {
            return Err(BraidError::StepBudgetExceeded {
                budget: self.limits.step_budget,
            });
        }
        let opener = self.letter[open as usize];
        let index = opener.abs();
        let e = opener.signum();
        let mut cur = self.next[open as usize];
        while cur != close {
            let nxt = self.next[cur as usize];
            let x = self.letter[cur as usize];
            if x.abs() == index + 1 {
                // a_{i+1}^d -> a_{i+1}^{-e} a_i^d a_{i+1}^e
                let before = self.prev[cur as usize];
                self.letter[cur as usize] = x.signum() * index;
                self.insert_after(before, -e * (index + 1));
                self.insert_after(cur, e * (index + 1));
            }
            cur = nxt;
        }
        let resume = self.prev[open as usize];
        self.remove(open);
        self.remove(close);
        if self.len > self.limits.max_word_length {
            return Err(BraidError::WordTooLong {
                length: self.len as u128,
                limit: self.limits.max_word_length,
            });
        }
        Ok(resume)
    }

    /// Runs until the word has no handle of any index.
    fn run(&mut self) -> Result<()> {
        let w = self.width;
        let mut before = self.head;
        loop {
            let cur = self.next[before as usize];
            if cur == NIL {
                return Ok(());
            }
            let x = self.letter[cur as usize];
            let j = x.unsigned_abs() as usize;
            let candidate = self.seen_at(before, j);
            if candidate != NIL && self.letter[candidate as usize] == -x {
                before = self.reduce(candidate, cur)?;
                continue;
            }
            let (src, dst) = (before as usize * w, cur as usize * w);
            for t in 0..w {
                self.seen[dst + t] = if t + 1 >= j { cur } else { self.seen[src + t] };
            }
            before = cur;
        }
    }

    fn letters(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.len);
        let mut cur = self.next[self.head as usize];
        while cur != NIL {
            out.push(self.letter[cur as usize]);
            cur = self.next[cur as usize];
        }
        out
    }
}

/// Handle reduction: the result is equal to `u` and contains no handle of
/// any index. In particular it has no `a_1`-handle, so it is
/// `σ_1`-positive, `σ_1`-negative or free of `a_1`.
pub fn handle_reduce(u: &BraidWord, limits: &Limits) -> Result<BraidWord> {
    let mut r = Reducer::new(u.strands(), u.letters(), limits);
    r.run()?;
    Ok(BraidWord::from_raw(u.strands(), r.letters()))
}

/// Sign read off a handle-free word: the lowest index present occurs with a
/// single exponent sign.
fn sign_of_reduced(letters: &[i32]) -> Option<OrderSign> {
    let lowest = letters.iter().min_by_key(|x| x.abs())?;
    Some(if *lowest > 0 {
        OrderSign::Positive
    } else {
        OrderSign::Negative
    })
}

fn sign_by_handles(word: &BraidWord, limits: &Limits) -> Result<OrderSign> {
    let reduced = handle_reduce(word, limits)?;
    sign_of_reduced(reduced.letters()).ok_or_else(|| {
        BraidError::Inconsistent("handle reduction emptied a nontrivial braid".into())
    })
}

/// Sign decided by the normal form alone, when it is.
fn sign_from_bounds(nf: &GarsideNormalForm) -> Option<OrderSign> {
    if nf.is_trivial() {
        Some(OrderSign::Zero)
    } else if nf.infimum >= 0 {
        // Δ^inf s_1 ⋯ s_r is a nonempty positive word
        Some(OrderSign::Positive)
    } else if nf.supremum() <= 0 {
        Some(OrderSign::Negative)
    } else {
        None
    }
}

/// Sign of `Δ^{2·twists} · u`, where `nf` is the normal form of `u`.
fn sign_twisted(u: &BraidWord, nf: &GarsideNormalForm, twists: i64, limits: &Limits) -> Result<OrderSign> {
    if let Some(sign) = sign_from_bounds(&nf.delta_shift(2 * twists)) {
        return Ok(sign);
    }
    let n = u.strands();
    let twist = BraidWord::full_twist(n).power_bounded(twists, limits.max_word_length)?;
    let word = twist.concat(u)?;
    if word.len() > limits.max_word_length {
        return Err(BraidError::WordTooLong {
            length: word.len() as u128,
            limit: limits.max_word_length,
        });
    }
    sign_by_handles(&word, limits)
}

/// Sign of `u` in the Dehornoy order. Zero exactly for the identity.
pub fn order_sign(u: &BraidWord, limits: &Limits) -> Result<OrderSign> {
    sign_twisted(u, &to_normal_form(u), 0, limits)
}

/// Sign of `u^{-1} v`: `Positive` means `v` is above `u`.
pub fn compare(u: &BraidWord, v: &BraidWord, limits: &Limits) -> Result<OrderSign> {
    order_sign(&u.inverse().concat(v)?, limits)
}

/// The unique `m` with `Δ^{2m} ⪯ u ≺ Δ^{2(m+1)}`.
///
/// Since `Δ^inf ⪯ u ⪯ Δ^sup`, `m` lies in `[⌊inf/2⌋, ⌈sup/2⌉]`; a binary
/// search over that bracket finds it.
pub fn dehornoy_floor(u: &BraidWord, limits: &Limits) -> Result<i64> {
    let n = u.strands();
    if n < 2 {
        return Err(BraidError::BadStrandCount { strands: n, min: 2 });
    }
    let nf = to_normal_form(u);
    let mut lo = nf.infimum.div_euclid(2);
    let mut hi = -((-nf.supremum()).div_euclid(2));
    let at_least = |m: i64| -> Result<bool> {
        Ok(sign_twisted(u, &nf, -m, limits)? != OrderSign::Negative)
    };
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        if at_least(mid)? {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(lo)
}

/// A word for `u` containing `a_1` but no `a_1^{-1}`.
pub fn to_sigma1_positive_word(u: &BraidWord, limits: &Limits) -> Result<BraidWord> {
    let r = handle_reduce(u, limits)?;
    if r.contains(1) && !r.contains(-1) {
        Ok(r)
    } else {
        Err(BraidError::NotSigma1Positive)
    }
}
