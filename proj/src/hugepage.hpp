#pragma once

#include <cstddef>
#include <cstdint>
#include <new>
#include <utility>

#ifdef __linux__
#include <sys/mman.h>
#endif

namespace ldst::detail {

// Large hot arrays come from 2 MiB-aligned anonymous mappings advised for
// transparent huge pages; random access across tens of megabytes is then
// TLB-cheap. Small blocks fall back to operator new. The size decides the
// path, so free only needs the same size back.

inline constexpr std::size_t kHugePage = std::size_t{2} << 20;
inline constexpr std::size_t kHugeThreshold = std::size_t{4} << 20;

inline void* hp_alloc_bytes(std::size_t bytes) {
  if (bytes == 0) return nullptr;
#ifdef __linux__
  if (bytes >= kHugeThreshold) {
    const std::size_t span = (bytes + kHugePage - 1) & ~(kHugePage - 1);
    void* raw = ::mmap(nullptr, span + kHugePage, PROT_READ | PROT_WRITE,
                       MAP_PRIVATE | MAP_ANONYMOUS, -1, 0);
    if (raw == MAP_FAILED) throw std::bad_alloc();
    const std::uintptr_t base = reinterpret_cast<std::uintptr_t>(raw);
    const std::uintptr_t aligned = (base + kHugePage - 1) & ~(kHugePage - 1);
    if (const std::size_t head = aligned - base; head > 0) ::munmap(raw, head);
    if (const std::size_t tail = kHugePage - (aligned - base); tail > 0)
      ::munmap(reinterpret_cast<void*>(aligned + span), tail);
    ::madvise(reinterpret_cast<void*>(aligned), span, MADV_HUGEPAGE);
    return reinterpret_cast<void*>(aligned);
  }
#endif
  return ::operator new(bytes);
}

inline void hp_free_bytes(void* p, std::size_t bytes) {
  if (p == nullptr) return;
#ifdef __linux__
  if (bytes >= kHugeThreshold) {
    const std::size_t span = (bytes + kHugePage - 1) & ~(kHugePage - 1);
    ::munmap(p, span);
    return;
  }
#endif
  ::operator delete(p);
}

// Fixed-capacity scratch buffer of a trivial type. Contents start zeroed on
// the mmap path and undefined otherwise; callers initialize what they read.
template <class T>
class HugeBuffer {
 public:
  HugeBuffer() = default;
  explicit HugeBuffer(std::size_t count) : count_(count) {
    data_ = static_cast<T*>(hp_alloc_bytes(count * sizeof(T)));
  }
  ~HugeBuffer() { hp_free_bytes(data_, count_ * sizeof(T)); }

  HugeBuffer(const HugeBuffer&) = delete;
  HugeBuffer& operator=(const HugeBuffer&) = delete;
  HugeBuffer(HugeBuffer&& other) noexcept
      : data_(std::exchange(other.data_, nullptr)), count_(std::exchange(other.count_, 0)) {}
  HugeBuffer& operator=(HugeBuffer&& other) noexcept {
    if (this != &other) {
      hp_free_bytes(data_, count_ * sizeof(T));
      data_ = std::exchange(other.data_, nullptr);
      count_ = std::exchange(other.count_, 0);
    }
    return *this;
  }

  T* data() { return data_; }
  const T* data() const { return data_; }
  std::size_t size() const { return count_; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

 private:
  T* data_ = nullptr;
  std::size_t count_ = 0;
};

}  // namespace ldst::detail
