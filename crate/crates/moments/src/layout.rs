use std::collections::BTreeSet;

use qmat::C64;

use crate::error::MomentsError;
use crate::symbol::{reduce_word, OperatorWord, Reduced, ReductionRules};

/// How one entry of a moment matrix relates to the shared moment variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryClass {
    /// Entry annihilated by same-setting orthogonality.
    Zero,
    /// Entry equals the moment of the canonical word with id `id`,
    /// conjugated when the entry's word is the reversal of the canonical one.
    Moment { id: usize, conjugated: bool },
}

/// Real/imaginary component of a moment, in vectorization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentPart {
    Re,
    Im,
}

/// Variable-sharing structure of the moment matrix `Γ(ρ)[i,j] = tr(S_j† S_i ρ)`.
///
/// Entries whose products reduce to the same word share one moment variable;
/// a word and its reversal are conjugates of each other, so each conjugation
/// pair is represented by its lexicographically smaller member. Palindromic
/// canonical words carry real moments for Hermitian targets.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentLayout {
    words: Vec<OperatorWord>,
    moments: Vec<OperatorWord>,
    real: Vec<bool>,
    entries: Vec<EntryClass>, // row-major, size() x size()
    rules: ReductionRules,
}

/// Builds the layout for a reduced, distinct word list starting with 𝟙.
pub fn build_layout(
    words: &[OperatorWord],
    rules: &ReductionRules,
) -> Result<MomentLayout, MomentsError> {
    if words.first().map(|w| w.is_identity()) != Some(true) {
        return Err(MomentsError::MissingIdentityWord);
    }
    for (index, w) in words.iter().enumerate() {
        let reduced_ok = matches!(reduce_word(w, rules), Reduced::Word(r) if &r == w);
        let duplicate = words[..index].contains(w);
        if !reduced_ok || duplicate {
            return Err(MomentsError::InvalidWordList { index });
        }
    }

    let m = words.len();
    let mut canonical_set: BTreeSet<OperatorWord> = BTreeSet::new();
    let mut entry_words: Vec<Option<OperatorWord>> = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            // entry (i, j) carries the word of S_j† S_i
            match reduce_word(&words[j].adjoint().concat(&words[i]), rules) {
                Reduced::Zero => entry_words.push(None),
                Reduced::Word(w) => {
                    let rev = w.adjoint();
                    canonical_set.insert(if rev < w { rev } else { w.clone() });
                    entry_words.push(Some(w));
                }
            }
        }
    }

    let moments: Vec<OperatorWord> = canonical_set.into_iter().collect();
    let real: Vec<bool> = moments.iter().map(|w| w.is_palindrome()).collect();
    let id_of = |w: &OperatorWord| moments.binary_search(w).expect("canonical word present");

    let entries: Vec<EntryClass> = entry_words
        .into_iter()
        .map(|ew| match ew {
            None => EntryClass::Zero,
            Some(w) => {
                let rev = w.adjoint();
                if rev < w {
                    EntryClass::Moment {
                        id: id_of(&rev),
                        conjugated: true,
                    }
                } else {
                    EntryClass::Moment {
                        id: id_of(&w),
                        conjugated: false,
                    }
                }
            }
        })
        .collect();

    Ok(MomentLayout {
        words: words.to_vec(),
        moments,
        real,
        entries,
        rules: *rules,
    })
}

impl MomentLayout {
    /// Number of words indexing the moment matrix.
    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[OperatorWord] {
        &self.words
    }

    pub fn rules(&self) -> &ReductionRules {
        &self.rules
    }

    /// Number of distinct canonical moments.
    pub fn n_moments(&self) -> usize {
        self.moments.len()
    }

    pub fn moment_word(&self, id: usize) -> &OperatorWord {
        &self.moments[id]
    }

    /// True when the moment is real for every Hermitian target.
    pub fn moment_is_real(&self, id: usize) -> bool {
        self.real[id]
    }

    pub fn entry(&self, i: usize, j: usize) -> EntryClass {
        self.entries[i * self.size() + j]
    }

    /// Id of the unit moment `tr(ρ)`, always present at entry (0,0).
    pub fn unit_moment(&self) -> usize {
        match self.entry(0, 0) {
            EntryClass::Moment { id, .. } => id,
            EntryClass::Zero => unreachable!("identity entry cannot vanish"),
        }
    }

    /// Finds the moment carrying an arbitrary word, with its conjugation flag.
    pub fn find_moment(&self, word: &OperatorWord) -> Option<(usize, bool)> {
        match reduce_word(word, &self.rules) {
            Reduced::Zero => None,
            Reduced::Word(w) => {
                let rev = w.adjoint();
                if rev < w {
                    self.moments.binary_search(&rev).ok().map(|id| (id, true))
                } else {
                    self.moments.binary_search(&w).ok().map(|id| (id, false))
                }
            }
        }
    }

    /// Real degrees of freedom of a moment assignment (one per real moment,
    /// two per conjugation pair).
    pub fn real_dof_count(&self) -> usize {
        self.real.iter().map(|&r| if r { 1 } else { 2 }).sum()
    }

    /// Vectorization order: per moment id ascending, Re then (if complex) Im.
    pub fn dofs(&self) -> Vec<(usize, MomentPart)> {
        let mut out = Vec::with_capacity(self.real_dof_count());
        for id in 0..self.n_moments() {
            out.push((id, MomentPart::Re));
            if !self.real[id] {
                out.push((id, MomentPart::Im));
            }
        }
        out
    }

    /// Flattens moment values into the real vector of `dofs()` order.
    pub fn vectorize(&self, values: &[C64]) -> Vec<f64> {
        assert_eq!(values.len(), self.n_moments(), "moment value count");
        let mut out = Vec::with_capacity(self.real_dof_count());
        for id in 0..self.n_moments() {
            out.push(values[id].re);
            if !self.real[id] {
                out.push(values[id].im);
            }
        }
        out
    }
}
