#include "collatz/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "kernels_detail.hpp"

namespace collatz::kernels {

namespace {

const Ops scalar_ops{
    "scalar",
    &detail::scalar_shr_bits,
    &detail::scalar_shl_bits,
    &detail::scalar_find_first_nonzero,
    &detail::scalar_triple_add1,
    &detail::scalar_shl1_add_self_inc,
};

const Ops* initial_table() {
    if (const char* env = std::getenv("COLLATZ_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_ops;
        if (std::strcmp(env, "avx2") == 0 && detail::avx2_table() != nullptr) {
            return detail::avx2_table();
        }
    }
    if (const Ops* avx2 = detail::avx2_table()) return avx2;
    return &scalar_ops;
}

const Ops*& active_slot() {
    static const Ops* slot = initial_table();
    return slot;
}

}  // namespace

const char* backend_name(Backend b) {
    return b == Backend::scalar ? "scalar" : "avx2";
}

bool backend_supported(Backend b) {
    if (b == Backend::scalar) return true;
    return detail::avx2_table() != nullptr;
}

const Ops& table(Backend b) {
    if (b == Backend::scalar) return scalar_ops;
    const Ops* avx2 = detail::avx2_table();
    if (avx2 == nullptr) throw std::runtime_error("avx2 kernels unavailable");
    return *avx2;
}

const Ops& active() { return *active_slot(); }

Backend active_backend() {
    return active_slot() == &scalar_ops ? Backend::scalar : Backend::avx2;
}

bool set_backend(Backend b) {
    if (!backend_supported(b)) return false;
    active_slot() = &table(b);
    return true;
}

}  // namespace collatz::kernels
