//! Romanization folding.
//!
//! Lemmas are written in Hepburn with macrons (`kinō`), but input often shows
//! up with circumflexes (`kinô`), doubled vowels (`kinou`, `kinoo`) or no
//! long-vowel marking at all (`kino`). All of these fold to the same key.

/// Folds a romanized morpheme to its lookup key.
pub fn fold(text: &str) -> String {
    let mut plain = String::with_capacity(text.len());
    for c in text.chars() {
        let mapped = match c {
            'ā' | 'â' | 'Ā' | 'Â' => 'a',
            'ē' | 'ê' | 'Ē' | 'Ê' => 'e',
            'ī' | 'î' | 'Ī' | 'Î' => 'i',
            'ō' | 'ô' | 'Ō' | 'Ô' => 'o',
            'ū' | 'û' | 'Ū' | 'Û' => 'u',
            '\'' | '’' => continue,
            c => c.to_ascii_lowercase(),
        };
        plain.push(mapped);
    }
    plain.replace("ou", "o").replace("oo", "o").replace("uu", "u")
}

/// Characters accepted inside a morpheme.
pub fn is_romaji_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '\'' | '’') || "āâĀÂēêĒÊīîĪÎōôŌÔūûŪÛ".contains(c)
}
