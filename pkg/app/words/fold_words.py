from app.models.fold_word import FoldWord


def parse_fold_word(text: str) -> FoldWord:
    """Parse ``text`` as a fold word, reporting the first bad position (1-based)."""
    return FoldWord.parse(text)


def complement_reverse(word: FoldWord) -> FoldWord:
    """Reverse ``word`` and swap A<->B and +<->- letter-wise."""
    return word.complement_reverse()
