use std::cmp::Ordering;
use std::fmt;

/// One measurement-effect symbol `E_{outcome|setting}` of a named party.
///
/// The last outcome of every setting is eliminated through completeness
/// (`E_last = 1 - Σ others`), so symbol alphabets only carry outcomes below
/// `n_outcomes - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EffectSymbol {
    pub party: char,
    pub setting: usize,
    pub outcome: usize,
}

impl EffectSymbol {
    pub fn new(party: char, setting: usize, outcome: usize) -> Self {
        Self {
            party,
            setting,
            outcome,
        }
    }
}

impl fmt::Display for EffectSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}|{}]", self.party, self.outcome, self.setting)
    }
}

/// An ordered product of effect symbols; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorWord {
    symbols: Vec<EffectSymbol>,
}

impl OperatorWord {
    pub fn identity() -> Self {
        Self {
            symbols: Vec::new(),
        }
    }

    pub fn from_symbols(symbols: Vec<EffectSymbol>) -> Self {
        Self { symbols }
    }

    pub fn single(symbol: EffectSymbol) -> Self {
        Self {
            symbols: vec![symbol],
        }
    }

    pub fn symbols(&self) -> &[EffectSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Adjoint of the word. Effects are Hermitian, so this is plain reversal.
    pub fn adjoint(&self) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Self { symbols }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Self { symbols }
    }

    pub fn append(&self, symbol: EffectSymbol) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.push(symbol);
        Self { symbols }
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.symbols.len();
        (0..n / 2).all(|i| self.symbols[i] == self.symbols[n - 1 - i])
    }
}

impl PartialOrd for OperatorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic order: by length, then symbolwise.
impl Ord for OperatorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.symbols.cmp(&other.symbols))
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Rewrite rules applied when reducing words.
///
/// Completeness is always handled at the alphabet level by eliminating the
/// last outcome of each setting; the projective flag additionally enables
/// idempotence `E^2 = E` and same-setting orthogonality `E_{b|y}E_{b'|y} = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionRules {
    pub projective: bool,
}

impl ReductionRules {
    pub fn projective() -> Self {
        Self { projective: true }
    }

    pub fn povm() -> Self {
        Self { projective: false }
    }
}

/// Result of word reduction; `Zero` when orthogonality annihilates the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduced {
    Word(OperatorWord),
    Zero,
}

/// Reduces a word to its normal form under the active rules.
pub fn reduce_word(word: &OperatorWord, rules: &ReductionRules) -> Reduced {
    if !rules.projective {
        return Reduced::Word(word.clone());
    }
    let mut symbols: Vec<EffectSymbol> = word.symbols().to_vec();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < symbols.len() {
            let (a, b) = (symbols[i], symbols[i + 1]);
            if a == b {
                symbols.remove(i + 1);
                changed = true;
                continue;
            }
            if a.party == b.party && a.setting == b.setting && a.outcome != b.outcome {
                return Reduced::Zero;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    Reduced::Word(OperatorWord::from_symbols(symbols))
}
