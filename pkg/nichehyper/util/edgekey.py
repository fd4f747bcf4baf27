from typing import Iterable, Tuple


def edge_key(edge: Iterable[str]) -> Tuple[str, ...]:
    """Sort key for hyperedges.

    All "lexicographic" choices in the package compare hyperedges by the
    sorted tuple of their vertex ids.

    Examples:
        edge_key({'c', 'a', 'b'}) -> ('a', 'b', 'c')
    """
    return tuple(sorted(edge))


def sorted_edges(edges):
    return sorted(edges, key=edge_key)


if __name__ == '__main__':
    assert edge_key({'c', 'a', 'b'}) == ('a', 'b', 'c')
    assert sorted_edges([{'b', 'c'}, {'a', 'z'}]) == [{'a', 'z'}, {'b', 'c'}]
    print('OK')
