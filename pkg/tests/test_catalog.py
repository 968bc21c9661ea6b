import random
from itertools import permutations

import pytest

from simplets import (
    InputError,
    IntegrityError,
    Simplet,
    build_complex,
    canonical_form,
    canonical_key,
    generate_catalog,
    induced_subcomplex,
    type_index,
)

from . import oracles


def relabeled(simplices, perm):
    return [tuple(sorted(perm[v] for v in s)) for s in simplices]


def test_single_edge_key(filled_triangle):
    simplet = induced_subcomplex(filled_triangle, {1, 2})
    key = canonical_key(simplet)
    assert key.vertex_count == 2
    assert key.simplices == ((0, 1),)


def test_empty_vs_filled_triangle_distinct(empty_triangle, filled_triangle):
    key_empty = canonical_key(induced_subcomplex(empty_triangle, {0, 1, 2}))
    key_filled = canonical_key(induced_subcomplex(filled_triangle, {0, 1, 2}))
    assert key_empty.vertex_count == key_filled.vertex_count == 3
    assert key_empty != key_filled
    assert (0, 1, 2) in key_filled.simplices
    assert (0, 1, 2) not in key_empty.simplices


def test_diamond_key_invariant_under_random_relabelings():
    # 4-cycle plus a chord, exactly one of the two triangles filled
    base = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (0, 1, 2)]
    reference = canonical_form(4, base)
    rng = random.Random(11)
    for _ in range(10):
        perm = list(range(4))
        rng.shuffle(perm)
        assert canonical_form(4, relabeled(base, perm)) == reference


def test_canonicalization_idempotent(catalog4):
    for key in catalog4.keys:
        assert canonical_form(key.vertex_count, key.simplices) == key


def test_relabeling_invariance_exhaustive_small(catalog4):
    for key in catalog4.keys:
        k = key.vertex_count
        for perm in permutations(range(k)):
            assert canonical_form(k, relabeled(key.simplices, perm)) == key


def test_relabeling_invariance_sampled_k5(catalog5):
    rng = random.Random(23)
    five_vertex = [key for key in catalog5.keys if key.vertex_count == 5]
    for key in rng.sample(five_vertex, 25):
        for _ in range(12):
            perm = list(range(5))
            rng.shuffle(perm)
            assert canonical_form(5, relabeled(key.simplices, perm)) == key


def test_relabeling_invariance_sampled_k6():
    # random 6-vertex simplets; every canonical key of a valid simplet is a
    # catalog entry, so this exercises the k=6 leg without the full catalog
    rng = random.Random(29)
    checked = 0
    while checked < 15:
        edges = [
            (u, v)
            for u in range(6)
            for v in range(u + 1, 6)
            if rng.random() < 0.5
        ]
        complex_ = build_complex(edges or [(0, 1)], 6)
        if len({v for e in complex_.facets for v in e}) < 6:
            continue
        simplet = induced_subcomplex(complex_, range(6))
        if simplet is None:
            continue
        key = canonical_key(simplet)
        for _ in range(8):
            perm = list(range(6))
            rng.shuffle(perm)
            assert canonical_form(6, relabeled(key.simplices, perm)) == key
        checked += 1


def test_catalog_sizes(catalog3, catalog4):
    assert len(generate_catalog(2)) == 1
    assert len(catalog3) == 4
    assert len(catalog4) == 18
    # derived independently: pairwise permutation-search isomorphism classes
    assert oracles.iso_class_count(2) == 1
    assert oracles.iso_class_count(3) == 3
    assert len(catalog3) == 1 + oracles.iso_class_count(3)


def test_catalog_m_range_rejected():
    for m in (1, 0, 7, 9):
        with pytest.raises(InputError):
            generate_catalog(m)


def test_catalog_keys_unique_and_ordered(catalog5):
    keys = catalog5.keys
    assert len(set(keys)) == len(keys)
    assert list(keys) == sorted(keys)
    assert [k.vertex_count for k in keys] == sorted(k.vertex_count for k in keys)


def test_catalog_keys_valid_complexes(catalog5):
    for key in catalog5.keys:
        assert oracles.downward_closed(key.vertex_count, key.simplices)
        assert oracles.skeleton_connected(key.vertex_count, key.simplices)


def test_catalog_keys_equal_full_permutation_minimum(catalog5):
    # the generator minimizes only over skeleton automorphisms; that must
    # coincide with the plain minimum over all k! relabelings
    for key in catalog5.keys:
        assert canonical_form(key.vertex_count, key.simplices) == key


def test_catalog_generation_deterministic(catalog4):
    again = generate_catalog(4)
    assert again.keys == catalog4.keys


def test_type_index_roundtrip(catalog4):
    edge_key = canonical_form(2, [(0, 1)])
    assert type_index(catalog4, edge_key) == 0
    for i, key in enumerate(catalog4.keys):
        assert type_index(catalog4, key) == i


def test_type_index_errors(catalog3, catalog4):
    four_vertex = next(k for k in catalog4.keys if k.vertex_count == 4)
    with pytest.raises(InputError):
        type_index(catalog3, four_vertex)
    from simplets import SimpletTypeKey

    non_canonical = SimpletTypeKey(3, ((0, 2), (1, 2)))
    with pytest.raises(IntegrityError):
        type_index(catalog3, non_canonical)


def test_canonical_key_of_every_simplet_is_in_catalog(catalog4):
    from .conftest import random_complexes

    for complex_ in random_complexes(6, max_n=9, seed=31):
        from simplets import enumerate_connected_subsets

        for vs in enumerate_connected_subsets(complex_, 4):
            key = canonical_key(Simplet(complex_, vs))
            assert catalog4.index_of(key) >= 0


def test_classifier_matches_direct_canonicalization(catalog4):
    from simplets import TypeClassifier, enumerate_connected_subsets

    from .conftest import random_complexes

    classifier = TypeClassifier(catalog4)
    for complex_ in random_complexes(4, max_n=9, seed=37):
        for vs in enumerate_connected_subsets(complex_, 4):
            simplet = Simplet(complex_, vs)
            assert classifier.index_of(simplet) == catalog4.index_of(
                canonical_key(simplet)
            )


@pytest.mark.slow
def test_catalog_k5_matches_plain_labeled_enumeration(catalog5):
    """Exhaustive labeled enumeration, no automorphism shortcuts."""
    from itertools import combinations

    def connected_spanning(edges, k):
        adj = {v: set() for v in range(k)}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == k

    k = 5
    pairs = list(combinations(range(k), 2))
    seen_keys = set()

    def fill(previous, size, acc):
        if size > k:
            seen_keys.add(canonical_form(k, acc))
            return
        prev = set(previous)
        cands = [
            c
            for c in combinations(range(k), size)
            if all(f in prev for f in combinations(c, size - 1))
        ]
        if not cands:
            seen_keys.add(canonical_form(k, acc))
            return
        for mask in range(1 << len(cands)):
            picked = [cands[i] for i in range(len(cands)) if mask >> i & 1]
            fill(picked, size + 1, acc + picked)

    for emask in range(1, 1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if emask >> i & 1]
        if connected_spanning(edges, k):
            fill(edges, 3, list(edges))

    assert seen_keys == {key for key in catalog5.keys if key.vertex_count == 5}


@pytest.mark.slow
def test_catalog_m6_generates():
    catalog6 = generate_catalog(6)
    assert len(catalog6) > len(generate_catalog(5))
    assert len(set(catalog6.keys)) == len(catalog6.keys)
    rng = random.Random(41)
    for key in rng.sample([k for k in catalog6.keys if k.vertex_count == 6], 40):
        assert oracles.downward_closed(6, key.simplices)
        assert oracles.skeleton_connected(6, key.simplices)
        assert canonical_form(6, key.simplices) == key
