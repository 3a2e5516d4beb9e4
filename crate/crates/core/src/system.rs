use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An ordered set of distinct symbols. A symbol's position is its code.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<u8>,
}

impl Alphabet {
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > 256 {
            return Err(Error::AlphabetTooLarge(symbols.len()));
        }
        let mut seen = [false; 256];
        for &b in symbols {
            if core::mem::replace(&mut seen[b as usize], true) {
                return Err(Error::DuplicateSymbol(b as char));
            }
        }
        Ok(Self {
            symbols: symbols.to_vec(),
        })
    }

    /// Sorted set of the distinct bytes appearing in `rows`.
    pub fn infer<'a, I>(rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [u8]>,
    {
        let mut seen = [false; 256];
        for row in rows {
            for &b in row {
                seen[b as usize] = true;
            }
        }
        let symbols: Vec<u8> = (0..=255u8).filter(|&b| seen[b as usize]).collect();
        Self::new(&symbols)
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn code(&self, symbol: u8) -> Option<u8> {
        self.symbols
            .iter()
            .position(|&s| s == symbol)
            .map(|p| p as u8)
    }

    pub fn symbol(&self, code: u8) -> Option<u8> {
        self.symbols.get(code as usize).copied()
    }
}

/// A set of row positions to delete from a [`System`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RowMask {
    indices: Vec<usize>,
}

impl RowMask {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(index: usize) -> Self {
        Self {
            indices: alloc::vec![index],
        }
    }

    /// Sorted and deduplicated.
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// An alignment of `k` rows by `n` columns of symbol codes.
///
/// Rows carry stable 1-based labels: the position of the row in the input it
/// was built from. Labels survive [`System::remove_rows`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System {
    alphabet: Alphabet,
    cells: Vec<u8>,
    k: usize,
    n: usize,
    labels: Vec<usize>,
}

impl System {
    /// Builds a system from rows of codes, labelling them `1..=k`.
    pub fn from_rows<R: AsRef<[u8]>>(alphabet: Alphabet, rows: &[R]) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::NoRows);
        }
        let n = rows[0].as_ref().len();
        let mut cells = Vec::with_capacity(k * n);
        for (h, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::RaggedRow {
                    label: h + 1,
                    len: row.len(),
                    expected: n,
                });
            }
            cells.extend_from_slice(row);
        }
        Self::from_cells(alphabet, k, n, cells, (1..=k).collect())
    }

    pub fn from_cells(
        alphabet: Alphabet,
        k: usize,
        n: usize,
        cells: Vec<u8>,
        labels: Vec<usize>,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::NoRows);
        }
        assert_eq!(cells.len(), k * n, "cell table does not match k x n");
        assert_eq!(labels.len(), k, "one label per row");
        let a = alphabet.size();
        if let Some(p) = cells.iter().position(|&c| c as usize >= a) {
            return Err(Error::CodeOutOfRange {
                row: labels[p / n.max(1)],
                column: p % n.max(1),
                code: cells[p],
                size: a,
            });
        }
        Ok(Self {
            alphabet,
            cells,
            k,
            n,
            labels,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Number of rows.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of columns (sites).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn row(&self, h: usize) -> &[u8] {
        &self.cells[h * self.n..(h + 1) * self.n]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[u8]> + '_ {
        self.cells.chunks_exact(self.n.max(1)).take(self.k)
    }

    pub fn cell(&self, h: usize, column: usize) -> u8 {
        self.cells[h * self.n + column]
    }

    pub fn column(&self, column: usize) -> impl ExactSizeIterator<Item = u8> + '_ {
        (0..self.k).map(move |h| self.cells[h * self.n + column])
    }

    pub(crate) fn check_column(&self, index: usize) -> Result<()> {
        if index >= self.n {
            Err(Error::ColumnOutOfRange { index, n: self.n })
        } else {
            Ok(())
        }
    }

    /// The sub-system with the rows in `mask` deleted.
    pub fn remove_rows(&self, mask: &RowMask) -> Result<Self> {
        if let Some(&bad) = mask.indices().iter().find(|&&x| x >= self.k) {
            return Err(Error::RowOutOfRange {
                index: bad,
                k: self.k,
            });
        }
        if mask.len() >= self.k {
            return Err(Error::RemovesAllRows {
                s: mask.len(),
                k: self.k,
            });
        }
        let keep = self.k - mask.len();
        let mut cells = Vec::with_capacity(keep * self.n);
        let mut labels = Vec::with_capacity(keep);
        let mut removed = mask.indices().iter().peekable();
        for h in 0..self.k {
            if removed.peek() == Some(&&h) {
                removed.next();
                continue;
            }
            cells.extend_from_slice(self.row(h));
            labels.push(self.labels[h]);
        }
        Ok(Self {
            alphabet: self.alphabet.clone(),
            cells,
            k: keep,
            n: self.n,
            labels,
        })
    }

    pub fn remove_row(&self, h: usize) -> Result<Self> {
        self.remove_rows(&RowMask::single(h))
    }
}
