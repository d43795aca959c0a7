//! Character-indexed string helpers. All offsets are Unicode scalar-value indices.

pub fn char_len(s: &str) -> usize {
    s.chars().count()
}

/// Byte offset of the `char_idx`-th scalar value (or `s.len()` at the end).
pub fn byte_offset(s: &str, char_idx: usize) -> Option<usize> {
    if char_idx == 0 {
        return Some(0);
    }
    let mut seen = 0;
    for (b, _) in s.char_indices() {
        if seen == char_idx {
            return Some(b);
        }
        seen += 1;
    }
    (seen == char_idx).then_some(s.len())
}

pub fn char_index_of_byte(s: &str, byte: usize) -> usize {
    s[..byte].chars().count()
}

pub fn char_slice(s: &str, start: usize, end: usize) -> Option<&str> {
    let b0 = byte_offset(s, start)?;
    let b1 = byte_offset(s, end)?;
    (b0 <= b1).then(|| &s[b0..b1])
}

/// Replaces the character range `[start, end)` with `with`.
pub fn splice_chars(s: &str, start: usize, end: usize, with: &str) -> Option<String> {
    let b0 = byte_offset(s, start)?;
    let b1 = byte_offset(s, end)?;
    if b0 > b1 {
        return None;
    }
    Some(splice_bytes(s, b0, b1, with))
}

pub fn splice_bytes(s: &str, start: usize, end: usize, with: &str) -> String {
    let mut out = String::with_capacity(s.len() + with.len());
    out.push_str(&s[..start]);
    out.push_str(with);
    out.push_str(&s[end..]);
    out
}

/// Collapses whitespace runs to one space and trims the ends.
pub fn collapse_spaces(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Upper-cases the first character of `word` when `like` starts with an upper-case letter.
pub fn match_initial_case(word: &str, like: &str) -> String {
    let upper = like.chars().next().is_some_and(char::is_uppercase);
    let mut chars = word.chars();
    match chars.next() {
        Some(first) if upper => first.to_uppercase().chain(chars).collect(),
        Some(first) if like.chars().next().is_some_and(char::is_lowercase) => {
            first.to_lowercase().chain(chars).collect()
        }
        _ => word.to_string(),
    }
}

/// Byte ranges of whole-word occurrences of `needle` in `haystack`.
pub fn find_word(haystack: &str, needle: &str) -> Vec<(usize, usize)> {
    if needle.is_empty() {
        return Vec::new();
    }
    let mut hits = Vec::new();
    let mut from = 0;
    while let Some(pos) = haystack[from..].find(needle) {
        let start = from + pos;
        let end = start + needle.len();
        let before_ok = haystack[..start]
            .chars()
            .next_back()
            .is_none_or(|c| !c.is_alphanumeric());
        let after_ok = haystack[end..].chars().next().is_none_or(|c| !c.is_alphanumeric());
        if before_ok && after_ok {
            hits.push((start, end));
        }
        from = start + needle.chars().next().map_or(1, char::len_utf8);
    }
    hits
}

/// Case-insensitive whole-word search; returns byte ranges in `haystack`.
pub fn find_word_ci(haystack: &str, needle: &str) -> Vec<(usize, usize)> {
    let needle_lower = needle.to_lowercase();
    let n = needle_lower.chars().count();
    let idx: Vec<(usize, char)> = haystack.char_indices().collect();
    let mut hits = Vec::new();
    if n == 0 || idx.len() < n {
        return hits;
    }
    for start in 0..=idx.len() - n {
        let end_byte = idx.get(start + n).map_or(haystack.len(), |&(b, _)| b);
        let candidate = &haystack[idx[start].0..end_byte];
        if candidate.to_lowercase() != needle_lower {
            continue;
        }
        let before_ok = start == 0 || !idx[start - 1].1.is_alphanumeric();
        let after_ok = idx.get(start + n).is_none_or(|&(_, c)| !c.is_alphanumeric());
        if before_ok && after_ok {
            hits.push((idx[start].0, end_byte));
        }
    }
    hits
}
