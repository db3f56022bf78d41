"""Smoke test for the minuscule_py extension module."""

import json

import minuscule_py as m


def main():
    e6 = m.RootSystem("E6")
    assert e6.rank == 6 and e6.coxeter_number == 12
    assert len(e6.positive_roots) == 36
    assert e6.minuscule_weights() == [1, 6]
    assert e6.pair([1, 0, 0, 0, 0, 0], e6.highest_root) == 1

    a1 = m.Orbit("A1", 1)
    assert len(a1) == 2
    assert a1.quantum_operator() == [[[], [(1, 1)]], [[(0, 1)], []]]

    cp3 = m.Orbit("A3", 1)
    # det(x - A) = x^4 - q
    assert cp3.charpoly() == [[(1, -1)], [], [], [], [(0, 1)]]

    e7 = m.Orbit("E7", 1)
    assert len(e7) == 56 and e7.dim_complex == 27
    assert e7.verify_main_theorem()
    assert e7.frobenius_check() and e7.grading_check()
    assert e7.quantum_operator() == e7.quantum_product_matrix()

    gr24 = m.Orbit("A3", 2)
    assert len(gr24.crystal_edges()) == 6
    assert all(gr24.length(w) == l for w, l in zip(gr24.weights, gr24.lengths))

    assert all(m.verify_case("D5", 5).values())

    sol = m.distinguished_solution("D4", 1)
    assert sol["dpw_exponents"] == ["0", "-1", "-1", "-1", "-1"]
    assert sol["alcove_point"] == ["0"] * 4

    assert m.satake_signs(5, 3) is not None
    assert m.satake_signs(3, 2) is None
    assert m.half_wedge_dims(4) == ("64", "64")

    doc = json.loads(m.emit("D4", 1, "ttstar"))
    assert doc["s"] == 6 and doc["orbit_size"] == 8

    try:
        m.Orbit("B3", 1)
    except ValueError:
        pass
    else:
        raise AssertionError("non-minuscule index accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
