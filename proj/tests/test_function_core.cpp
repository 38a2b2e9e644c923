#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "workbench/function.hpp"

using namespace wb;

TEST_CASE("BitVec round trips values LSB-first") {
    BitVec v(5, 0b10110);
    CHECK(v.width() == 5);
    CHECK(v.bit(0) == false);
    CHECK(v.bit(1) == true);
    CHECK(v.bit(4) == true);
    CHECK(v.to_u64() == 0b10110);
    CHECK_THROWS_AS(BitVec(3, 8), std::invalid_argument);
    CHECK(BitVec(0, 0).width() == 0);
}

TEST_CASE("BitVec slice and concat are inverse") {
    BitVec a(4, 0b1010), b(3, 0b011);
    std::vector<BitVec> parts{a, b};
    BitVec c = BitVec::concat(parts);
    CHECK(c.width() == 7);
    CHECK(c.slice(0, 4) == a);
    CHECK(c.slice(4, 3) == b);
    CHECK(c.to_u64() == (0b011u << 4 | 0b1010u));
}

static Circuit xor_swap_circuit() {
    // 2-in 2-out: (x0^x1, x1)
    Circuit c(2, 2);
    c.add_gate({GateKind::Input, 0});
    c.add_gate({GateKind::Input, 1});
    c.add_gate({GateKind::Xor, 0, 1});
    c.set_outputs({2, 1});
    return c;
}

TEST_CASE("Circuit eval matches gate semantics") {
    Circuit c = xor_swap_circuit();
    for (uint64_t x = 0; x < 4; ++x) {
        uint64_t x0 = x & 1, x1 = (x >> 1) & 1;
        uint64_t want = (x0 ^ x1) | (x1 << 1);
        CHECK(c.eval(BitVec(2, x)).to_u64() == want);
    }
    CHECK_THROWS_AS(c.eval(BitVec(3, 0)), std::invalid_argument);
}

TEST_CASE("Circuit rejects forward references and bad indices") {
    Circuit c(2, 1);
    CHECK_THROWS_AS(c.add_gate({GateKind::Not, 0}), std::invalid_argument);
    CHECK_THROWS_AS(c.add_gate({GateKind::Input, 2}), std::invalid_argument);
    c.add_gate({GateKind::Input, 0});
    CHECK_THROWS_AS(c.add_gate({GateKind::And, 0, 1}), std::invalid_argument);
}

TEST_CASE("Circuit text round trip is byte-identical") {
    Circuit c = xor_swap_circuit();
    std::string text = c.serialize();
    CHECK(text ==
          "circuit 2 2\n"
          "g0 = INPUT 0\n"
          "g1 = INPUT 1\n"
          "g2 = XOR g0 g1\n"
          "out g2 g1\n");
    Circuit p = Circuit::parse(text);
    CHECK(p.serialize() == text);
    for (uint64_t x = 0; x < 4; ++x)
        CHECK(p.eval(BitVec(2, x)) == c.eval(BitVec(2, x)));
}

TEST_CASE("Circuit parse reports the offending line") {
    try {
        Circuit::parse("circuit 1 1\ng0 = INPUT 0\ng1 = NOT g5\nout g1\n");
        FAIL("expected a parse error");
    } catch (const CircuitParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(Circuit::parse("circuit 1\n"), CircuitParseError);
    CHECK_THROWS_AS(Circuit::parse("circuit 1 1\ng0 = INPUT 0\n"),
                    CircuitParseError);
    // output count must match the declared width
    CHECK_THROWS_AS(Circuit::parse("circuit 1 2\ng0 = INPUT 0\nout g0\n"),
                    CircuitParseError);
}

TEST_CASE("from_truth_table validates and evaluates") {
    Function f = from_truth_table(2, 2, {1, 2, 3, 0});
    CHECK(f.eval_u64(0) == 1);
    CHECK(f.eval_u64(3) == 0);
    CHECK_THROWS_AS(from_truth_table(2, 2, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(from_truth_table(2, 1, {0, 2, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(from_truth_table(21, 1, {}), std::invalid_argument);
}

TEST_CASE("truth table agrees with the circuit it tabulates") {
    Circuit c = xor_swap_circuit();
    std::vector<uint64_t> rows;
    for (uint64_t x = 0; x < 4; ++x) rows.push_back(c.eval(BitVec(2, x)).to_u64());
    Function t = from_truth_table(2, 2, rows);
    for (uint64_t x = 0; x < 4; ++x)
        CHECK(t.eval_u64(x) == c.eval(BitVec(2, x)).to_u64());
}

TEST_CASE("compose chains widths and values") {
    Function inc = from_truth_table(2, 2, {1, 2, 3, 0});
    Function twice = compose(inc, inc);
    for (uint64_t x = 0; x < 4; ++x) CHECK(twice.eval_u64(x) == (x + 2) % 4);
    Function wide = from_truth_table(3, 1, {0, 1, 0, 1, 0, 1, 0, 1});
    CHECK_THROWS_AS(compose(wide, inc), std::invalid_argument);
}

TEST_CASE("pack/unpack args field layout") {
    std::vector<uint64_t> prefix{3, 1};
    BitVec packed = pack_args(prefix, 2, 3);
    CHECK(packed.width() == 9);
    auto back = unpack_args(packed, 3, 3);
    CHECK(back == std::vector<uint64_t>{3, 1, 2});
    CHECK(packed.slice(0, 3).to_u64() == 3);  // prefix[0] least significant
}

TEST_CASE("constant and identity helpers") {
    Function k = constant_function(4, 3, 5);
    CHECK(k.eval_u64(9) == 5);
    Function id = identity_function(3);
    for (uint64_t x = 0; x < 8; ++x) CHECK(id.eval_u64(x) == x);
}
