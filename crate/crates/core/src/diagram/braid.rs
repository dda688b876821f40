use std::fmt;

use super::DiagramError;

/// A braid word: letter `i` is `sigma_i`, `-i` its inverse, with
/// `1 <= i < strands`. Letters apply left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, DiagramError> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(DiagramError::BadLetter { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// Parses `braid <s>: 1 -2 1`.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let bad = |msg: &str| DiagramError::Malformed { line: 1, msg: msg.to_string() };
        let body: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join(" ");
        let rest = body.trim().strip_prefix("braid").ok_or_else(|| bad("expected `braid <s>: ...`"))?;
        let (s, letters) = rest.split_once(':').ok_or_else(|| bad("expected `:` after the strand count"))?;
        let strands = s.trim().parse().map_err(|_| bad("bad strand count"))?;
        let letters = letters
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| bad(&format!("bad letter `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    /// The pure braid generator `A_ij` (1-based, `i < j`) raised to `exp`:
    /// strand `j` travels in front of `i+1..j-1` and loops once around `i`.
    pub fn pure_generator(strands: usize, i: usize, j: usize, exp: i32) -> Result<Self, DiagramError> {
        if !(1 <= i && i < j && j <= strands) {
            return Err(DiagramError::BadLetter { letter: j as i32, strands });
        }
        let mut one = Vec::new();
        for m in (i + 1..j).rev() {
            one.push(m as i32);
        }
        one.push(i as i32);
        one.push(i as i32);
        for m in i + 1..j {
            one.push(-(m as i32));
        }
        let base = BraidWord { strands, letters: one };
        let unit = if exp < 0 { base.inverse() } else { base };
        let mut out = BraidWord::identity(strands);
        for _ in 0..exp.unsigned_abs() {
            out = out.concat(&unit);
        }
        Ok(out)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `perm[p]` is where the strand starting at position `p` ends.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> Self {
        assert_eq!(self.strands, other.strands, "braid strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// This word on `strands` strands, moved up by `offset` positions.
    pub fn embed(&self, strands: usize, offset: usize) -> Result<Self, DiagramError> {
        let letters = self
            .letters
            .iter()
            .map(|&l| l.signum() * (l.abs() + offset as i32))
            .collect();
        BraidWord::new(strands, letters)
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &BraidWord, b: &BraidWord) -> Self {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid {}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}
