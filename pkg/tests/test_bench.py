import pytest

from cliqueorder import (
    CSV_HEADER,
    OptimizerConfig,
    brute_force_max_clique,
    er_generate,
    rows_to_csv,
    run_bench,
)


CHEAP = OptimizerConfig(outer_iters=10, restarts=1)


class TestRunBench:
    def test_row_per_p_and_strategy(self):
        rows = run_bench(10, [0.3, 0.6], 2, strategies=("random", "degree"), seed=7)
        assert [(r.p, r.strategy) for r in rows] == [
            (0.3, "random"),
            (0.3, "degree"),
            (0.6, "random"),
            (0.6, "degree"),
        ]
        assert all(r.n == 10 and r.instances == 2 for r in rows)

    def test_means_match_direct_solves(self):
        rows = run_bench(12, [0.5], 3, strategies=("degree",), seed=3)
        row = rows[0]
        omegas = [
            len(brute_force_max_clique(er_generate(12, 0.5, 3 + i))) for i in range(3)
        ]
        assert row.mean_omega == pytest.approx(sum(omegas) / 3)
        assert row.mean_steps > 0
        assert row.mean_search_s >= 0
        assert row.mean_infer_s == 0.0
        assert row.mean_order_s >= 0

    def test_same_instances_across_strategies(self):
        rows = run_bench(12, [0.5], 4, strategies=("random", "degree"), seed=11)
        by_strategy = {r.strategy: r for r in rows}
        assert by_strategy["random"].mean_omega == by_strategy["degree"].mean_omega

    def test_learned_reports_inference_time(self):
        rows = run_bench(10, [0.5], 2, strategies=("learned",), seed=1, cfg=CHEAP)
        row = rows[0]
        assert row.mean_infer_s > 0
        assert row.mean_infer_s == pytest.approx(row.mean_order_s)

    def test_non_learned_inference_time_zero(self):
        rows = run_bench(10, [0.5], 2, strategies=("random", "degree"), seed=1)
        assert all(r.mean_infer_s == 0.0 for r in rows)

    def test_pad_to_keeps_omega(self):
        plain = run_bench(10, [0.5], 3, strategies=("degree",), seed=5)
        padded = run_bench(10, [0.5], 3, strategies=("degree",), seed=5, pad_to=16)
        assert plain[0].mean_omega == pytest.approx(padded[0].mean_omega)

    def test_steps_deterministic(self):
        a = run_bench(12, [0.4], 3, strategies=("degree",), seed=9)
        b = run_bench(12, [0.4], 3, strategies=("degree",), seed=9)
        assert a[0].mean_steps == b[0].mean_steps

    def test_rejects_unknown_strategy(self):
        with pytest.raises(ValueError):
            run_bench(10, [0.5], 1, strategies=("greedy",))

    def test_rejects_zero_instances(self):
        with pytest.raises(ValueError):
            run_bench(10, [0.5], 0)


class TestRowsToCsv:
    def test_header_and_shape(self):
        rows = run_bench(8, [0.5], 2, strategies=("random", "degree"), seed=2)
        csv = rows_to_csv(rows)
        lines = csv.strip().split("\n")
        assert lines[0] == CSV_HEADER
        assert lines[0] == "p,strategy,mean_steps,mean_search_s,mean_infer_s,mean_omega,mean_order_s"
        assert len(lines) == 3
        for line in lines[1:]:
            fields = line.split(",")
            assert len(fields) == 7
            assert fields[0] == "0.5"
            assert fields[1] in ("random", "degree")
            float(fields[2])  # numeric columns parse

    def test_p_formatting_compact(self):
        rows = run_bench(8, [0.3], 1, strategies=("degree",), seed=2)
        assert rows_to_csv(rows).split("\n")[1].startswith("0.3,degree,")

    def test_empty_rows_header_only(self):
        assert rows_to_csv([]) == CSV_HEADER + "\n"
