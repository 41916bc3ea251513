#pragma once

#include <hqp/error.hpp>
#include <hqp/io.hpp>
#include <hqp/operation.hpp>

#include <initializer_list>
#include <optional>
#include <vector>

namespace hqp::testing {

inline Operation op1(int arity, int order, std::initializer_list<Symbol> entries) {
    return Operation::from_entries_1based(arity, order,
                                          std::vector<Symbol>(entries));
}

inline Operation fx(const std::string& name) { return load_fixture(name); }

template <typename Fn>
std::optional<Errc> thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace hqp::testing

#define CHECK_FAILS_WITH(code, ...) \
    CHECK(hqp::testing::thrown_code([&] { (void)(__VA_ARGS__); }) == hqp::Errc::code)
