"""Smoke tests of the python bindings: one happy path per main operation."""

import kp3core as k

C5 = "p edge 5 5\nparam k 2\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n"


def path_graph(n):
    return k.Graph(n, [(v, v + 1) for v in range(n - 1)])


def test_parse_and_solve_oct():
    inst = k.parse_instance(C5)
    sol = k.solve_oct(inst)
    assert sol.weight == "1"
    assert len(sol.chosen) == 1
    assert k.brute_oct(inst) == "1"
    ok, why = k.check_solution(inst, sol)
    assert ok, why


def test_round_trip_and_digest():
    inst = k.parse_instance(C5)
    text = k.serialize_instance(inst)
    again = k.parse_instance(text)
    assert k.serialize_instance(again) == text
    assert len(k.instance_digest(inst)) == 16


def test_amiable_family_on_p3():
    g = path_graph(3)
    fam = k.gamma_k(g, 2)
    assert [0, 2] in fam.members
    assert k.verify_amiable(g, fam).ok


def test_distance_family_and_dsis():
    g = path_graph(7)
    inst = k.make_instance(g, r=1, k=3, d=6)
    sol = k.solve_distance_d_mwis(inst)
    assert sol.weight == "2"
    assert sol.chosen == [0, 6]
    fam = k.lambda_k_d(g, [], 3, 6)
    assert k.verify_distance_family(g, [], 6, fam).ok
    assert k.brute_distance_mwis(inst) == "2"


def test_mwlcis_with_rational_weights():
    inst = k.parse_instance(C5 + "param r 2\nw 1 7/2\n")
    sol = k.solve_mwlcis(inst)
    assert sol.weight == k.brute_mwlcis(inst)
    assert sol.coloring is not None


def test_list_dr_coloring():
    yes = k.make_instance(k.Graph(2, [(0, 1)]), r=2, k=1, d=6)
    assert k.solve_list_dr_coloring(yes).decision_yes
    assert k.brute_list_dr_coloring(yes)

    no = k.make_instance(path_graph(7), r=2, k=3, d=6)
    assert not k.solve_list_dr_coloring(no).decision_yes
    assert not k.brute_list_dr_coloring(no)


def test_unsupported_distance_raises():
    inst = k.make_instance(path_graph(3), r=1, k=2, d=5)
    try:
        k.solve_list_dr_coloring(inst)
    except ValueError:
        pass
    else:
        raise AssertionError("d=5 must be rejected")


def test_generator_is_deterministic_and_verified():
    a = k.generate_kp3_free("structured", 12, 2, 500, seed=7)
    b = k.generate_kp3_free("structured", 12, 2, 500, seed=7)
    assert a.edges() == b.edges()
    assert not k.contains_k_disjoint_p3(a, 2)


def test_graph_primitives():
    g = path_graph(4)
    assert not k.is_p3_free(g)
    assert k.is_p3_free(k.induced_subgraph(g, [0, 1, 3]))
    assert k.power_graph(g, 3).edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    assert k.is_distance_d_independent(g, [0, 3], 3)
    assert len(k.enumerate_maximal_independent_sets(k.Graph(4, []))) == 1


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok   {name}")
            except AssertionError as error:
                print(f"FAIL {name}: {error}")
                failures += 1
    raise SystemExit(1 if failures else 0)
