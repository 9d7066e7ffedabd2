use crate::error::{Error, Result};

/// An ingested multiset of labels: the distinct labels of one table column
/// together with their row counts.
///
/// The cumulative offsets map each of the `W` rows back to its label, which
/// is what makes uniform row sampling (and therefore magnitude-proportional
/// label sampling) possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableColumn {
    labels: Vec<String>,
    counts: Vec<u64>,
    /// `cum[i]` is the number of rows carried by labels `0..i`; `cum[n] = W`.
    cum: Vec<u64>,
}

impl TableColumn {
    /// Builds a column from distinct labels and their positive counts.
    pub fn new(labels: Vec<String>, counts: Vec<u64>) -> Result<Self> {
        if labels.len() != counts.len() {
            return Err(Error::invalid("labels and counts have different lengths"));
        }
        if labels.is_empty() {
            return Err(Error::EmptyTable);
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("labels must be distinct"));
        }
        let mut cum = Vec::with_capacity(counts.len() + 1);
        let mut total = 0u64;
        cum.push(0);
        for (i, &c) in counts.iter().enumerate() {
            if c == 0 {
                return Err(Error::invalid(format!(
                    "label {:?} has zero count; counts must be positive",
                    labels[i]
                )));
            }
            total = total
                .checked_add(c)
                .ok_or_else(|| Error::invalid("row count overflows u64"))?;
            cum.push(total);
        }
        Ok(TableColumn {
            labels,
            counts,
            cum,
        })
    }

    /// Builds a column with synthetic labels `"0", "1", ...`.
    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        let labels = (0..counts.len()).map(|i| i.to_string()).collect();
        TableColumn::new(labels, counts.to_vec())
    }

    /// Number of distinct labels.
    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    /// Total row count `W`.
    pub fn rows(&self) -> u64 {
        *self.cum.last().unwrap()
    }

    pub fn count(&self, label: usize) -> u64 {
        self.counts[label]
    }

    pub fn label(&self, label: usize) -> &str {
        &self.labels[label]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of the given row index in `[0, W)`.
    pub(crate) fn row_label(&self, row: u64) -> usize {
        debug_assert!(row < self.rows());
        // partition_point returns the first index with cum > row; labels are
        // offset by one because cum[0] = 0.
        self.cum.partition_point(|&c| c <= row) - 1
    }
}
