use super::{Scale, SimilarityScore};

/// Insert/delete/substitute distance over Unicode scalar values.
pub fn edit_distance(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

pub fn levenshtein(a: &str, b: &str) -> SimilarityScore {
    SimilarityScore {
        value: edit_distance(a, b) as f64,
        scale: Scale::NonnegativeInt,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Full-table DP, written independently of the rolling-row version.
    fn table(a: &str, b: &str) -> usize {
        let a: Vec<char> = a.chars().collect();
        let b: Vec<char> = b.chars().collect();
        let mut d = vec![vec![0usize; b.len() + 1]; a.len() + 1];
        for (i, row) in d.iter_mut().enumerate() {
            row[0] = i;
        }
        for (j, cell) in d[0].iter_mut().enumerate() {
            *cell = j;
        }
        for i in 1..=a.len() {
            for j in 1..=b.len() {
                let cost = if a[i - 1] == b[j - 1] { 0 } else { 1 };
                d[i][j] = (d[i - 1][j] + 1).min(d[i][j - 1] + 1).min(d[i - 1][j - 1] + cost);
            }
        }
        d[a.len()][b.len()]
    }

    #[test]
    fn known_distances() {
        assert_eq!(edit_distance("kitten", "sitting"), 3);
        assert_eq!(table("kitten", "sitting"), 3);
        assert_eq!(edit_distance("", "abc"), 3);
        assert_eq!(edit_distance("Madonna", "Madonna"), 0);
        assert_eq!(edit_distance("θόρυβος", "θορυβος"), 1);
        assert_eq!(levenshtein("ab", "ba").value, 2.0);
    }

    #[test]
    fn agrees_with_full_table() {
        let words = [
            "",
            "a",
            "ab",
            "Garza",
            "Madonna",
            "1932",
            "1923",
            "Paris",
            "Parsi",
            "日本語",
        ];
        for x in words {
            for y in words {
                assert_eq!(edit_distance(x, y), table(x, y), "{x} / {y}");
            }
        }
    }
}
