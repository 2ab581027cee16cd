// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyndon/alloc_counter.hpp"

#include <atomic>
#include <cstdlib>
#include <new>

namespace lyndon::alloc {
namespace {

std::atomic<std::size_t> g_live{0};
std::atomic<std::size_t> g_peak{0};
std::atomic<std::size_t> g_count{0};

// Every block carries its size in a header of kHeader bytes (or of the
// requested alignment, if larger).
constexpr std::size_t kHeader = alignof(std::max_align_t);

void note_alloc(std::size_t size) noexcept {
    const std::size_t now = g_live.fetch_add(size, std::memory_order_relaxed) + size;
    std::size_t peak = g_peak.load(std::memory_order_relaxed);
    while (now > peak && !g_peak.compare_exchange_weak(peak, now, std::memory_order_relaxed)) {
    }
    g_count.fetch_add(1, std::memory_order_relaxed);
}

void* allocate(std::size_t size, std::size_t align) noexcept {
    const std::size_t header = align > kHeader ? align : kHeader;
    void* raw = nullptr;
    if (align > kHeader) {
        const std::size_t total = (size + header + align - 1) / align * align;
        raw = std::aligned_alloc(align, total);
    } else {
        raw = std::malloc(size + header);
    }
    if (raw == nullptr) return nullptr;
    auto* base = static_cast<unsigned char*>(raw);
    *reinterpret_cast<std::size_t*>(base + header - sizeof(std::size_t)) = size;
    note_alloc(size);
    return base + header;
}

void release(void* p, std::size_t align) noexcept {
    if (p == nullptr) return;
    const std::size_t header = align > kHeader ? align : kHeader;
    auto* user = static_cast<unsigned char*>(p);
    const std::size_t size = *reinterpret_cast<std::size_t*>(user - sizeof(std::size_t));
    g_live.fetch_sub(size, std::memory_order_relaxed);
    std::free(user - header);
}

void* allocate_or_throw(std::size_t size, std::size_t align) {
    for (;;) {
        if (void* p = allocate(size, align)) return p;
        std::new_handler handler = std::get_new_handler();
        if (handler == nullptr) throw std::bad_alloc();
        handler();
    }
}

}  // namespace

std::size_t live_bytes() noexcept { return g_live.load(std::memory_order_relaxed); }
std::size_t peak_bytes() noexcept { return g_peak.load(std::memory_order_relaxed); }
std::size_t allocation_count() noexcept { return g_count.load(std::memory_order_relaxed); }
void reset_peak() noexcept { g_peak.store(g_live.load(std::memory_order_relaxed), std::memory_order_relaxed); }

}  // namespace lyndon::alloc

using lyndon::alloc::allocate;
using lyndon::alloc::allocate_or_throw;
using lyndon::alloc::release;

void* operator new(std::size_t size) { return allocate_or_throw(size, 0); }
void* operator new[](std::size_t size) { return allocate_or_throw(size, 0); }
void* operator new(std::size_t size, const std::nothrow_t&) noexcept { return allocate(size, 0); }
void* operator new[](std::size_t size, const std::nothrow_t&) noexcept { return allocate(size, 0); }
void* operator new(std::size_t size, std::align_val_t al) { return allocate_or_throw(size, static_cast<std::size_t>(al)); }
void* operator new[](std::size_t size, std::align_val_t al) {
    return allocate_or_throw(size, static_cast<std::size_t>(al));
}
void* operator new(std::size_t size, std::align_val_t al, const std::nothrow_t&) noexcept {
    return allocate(size, static_cast<std::size_t>(al));
}
void* operator new[](std::size_t size, std::align_val_t al, const std::nothrow_t&) noexcept {
    return allocate(size, static_cast<std::size_t>(al));
}

void operator delete(void* p) noexcept { release(p, 0); }
void operator delete[](void* p) noexcept { release(p, 0); }
void operator delete(void* p, std::size_t) noexcept { release(p, 0); }
void operator delete[](void* p, std::size_t) noexcept { release(p, 0); }
void operator delete(void* p, const std::nothrow_t&) noexcept { release(p, 0); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { release(p, 0); }
void operator delete(void* p, std::align_val_t al) noexcept { release(p, static_cast<std::size_t>(al)); }
void operator delete[](void* p, std::align_val_t al) noexcept { release(p, static_cast<std::size_t>(al)); }
void operator delete(void* p, std::size_t, std::align_val_t al) noexcept { release(p, static_cast<std::size_t>(al)); }
void operator delete[](void* p, std::size_t, std::align_val_t al) noexcept {
    release(p, static_cast<std::size_t>(al));
}
void operator delete(void* p, std::align_val_t al, const std::nothrow_t&) noexcept {
    release(p, static_cast<std::size_t>(al));
}
void operator delete[](void* p, std::align_val_t al, const std::nothrow_t&) noexcept {
    release(p, static_cast<std::size_t>(al));
}
