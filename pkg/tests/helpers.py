from itertools import product


def valid_fold_words(max_length: int) -> list[str]:
    """Every word of odd length up to ``max_length`` with alternating moves."""
    words = []
    for moves in range(1, (max_length + 1) // 2 + 1):
        for first, second in (("A", "B"), ("B", "A")):
            letters = [first if k % 2 == 0 else second for k in range(moves)]
            for turns in product("+-", repeat=moves - 1):
                words.append(
                    letters[0] + "".join(t + m for t, m in zip(turns, letters[1:]))
                )
    return words
