import cycperm


def main():
    assert cycperm.count_cyclic_codes(7, 2) == 8
    report = cycperm.analyze(2, 7, [1, 2, 4])
    assert report["k"] == 4 and report["m"] == 3
    assert report["distance"]["d"] == 3
    verdict = cycperm.equivalent(2, 7, [1, 2, 4], [3, 5, 6], "multiplier")
    assert verdict["status"] == "equivalent"
    assert cycperm.multiplier_set(2, 7, [1, 2, 4]) == [1, 2, 4]
    codes = cycperm.enumerate_codes(2, 7)
    assert len(codes) == 8
    print("python smoke: ok")


if __name__ == "__main__":
    main()
