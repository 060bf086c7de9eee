// Copyright 2026 The abka Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Framed, ordered, reliable delivery of wire frames: an in-memory
// loopback pair (with a frame trace for tests) and a TCP transport.

#ifndef ABKA_TRANSPORT_HPP
#define ABKA_TRANSPORT_HPP

#include <condition_variable>
#include <cstring>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <arpa/inet.h>
#include <netdb.h>
#include <sys/socket.h>
#include <unistd.h>

#include "abka/bytes.hpp"
#include "abka/errors.hpp"
#include "abka/wire.hpp"

namespace abka {

struct Frame {
  FrameType type;
  Bytes payload;
};

class Transport {
 public:
  virtual ~Transport() = default;
  virtual void send(FrameType type, ByteSpan payload) = 0;
  virtual Frame recv() = 0;  // blocks; throws TransportError on close
  virtual void close() = 0;
};

// ------------------------------------------------------ loopback --

// Two connected in-process endpoints. Frames are queued whole, so a
// single thread can drive both sides as long as every recv is preceded
// by the matching send. The shared trace records every frame type in
// transmission order.
class LoopbackPair {
 public:
  LoopbackPair()
      : state_(std::make_shared<State>()),
        a_(std::make_shared<Endpoint>(state_, /*a_to_b=*/true)),
        b_(std::make_shared<Endpoint>(state_, /*a_to_b=*/false)) {}

  Transport& a() { return *a_; }
  Transport& b() { return *b_; }

  std::vector<FrameType> trace() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->trace;
  }

 private:
  struct State {
    mutable std::mutex mu;
    std::condition_variable cv;
    std::deque<Frame> a_to_b, b_to_a;
    bool closed = false;
    std::vector<FrameType> trace;
  };

  class Endpoint final : public Transport {
   public:
    Endpoint(std::shared_ptr<State> state, bool a_to_b)
        : state_(std::move(state)), a_to_b_(a_to_b) {}

    void send(FrameType type, ByteSpan payload) override {
      if (payload.size() > kMaxFramePayload) {
        throw TransportError("frame too large");
      }
      std::lock_guard<std::mutex> lock(state_->mu);
      if (state_->closed) throw TransportError("peer closed");
      auto& queue = a_to_b_ ? state_->a_to_b : state_->b_to_a;
      queue.push_back(Frame{type, Bytes(payload.begin(), payload.end())});
      state_->trace.push_back(type);
      state_->cv.notify_all();
    }

    Frame recv() override {
      std::unique_lock<std::mutex> lock(state_->mu);
      auto& queue = a_to_b_ ? state_->b_to_a : state_->a_to_b;
      state_->cv.wait(lock,
                      [&] { return !queue.empty() || state_->closed; });
      if (queue.empty()) throw TransportError("peer closed");
      Frame f = std::move(queue.front());
      queue.pop_front();
      return f;
    }

    void close() override {
      std::lock_guard<std::mutex> lock(state_->mu);
      state_->closed = true;
      state_->cv.notify_all();
    }

   private:
    std::shared_ptr<State> state_;
    bool a_to_b_;
  };

  std::shared_ptr<State> state_;
  std::shared_ptr<Endpoint> a_, b_;
};

// ----------------------------------------------------------- TCP --

namespace detail {

class FdGuard {
 public:
  explicit FdGuard(int fd = -1) : fd_(fd) {}
  ~FdGuard() { reset(); }
  FdGuard(const FdGuard&) = delete;
  FdGuard& operator=(const FdGuard&) = delete;
  FdGuard(FdGuard&& o) noexcept : fd_(o.release()) {}
  FdGuard& operator=(FdGuard&& o) noexcept {
    if (this != &o) {
      reset();
      fd_ = o.release();
    }
    return *this;
  }
  int get() const { return fd_; }
  int release() {
    int fd = fd_;
    fd_ = -1;
    return fd;
  }
  void reset() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_;
};

inline void write_all(int fd, const std::uint8_t* data, std::size_t len) {
  while (len > 0) {
    ssize_t n = ::send(fd, data, len, 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw TransportError("send failed");
    }
    data += n;
    len -= static_cast<std::size_t>(n);
  }
}

inline void read_all(int fd, std::uint8_t* data, std::size_t len) {
  while (len > 0) {
    ssize_t n = ::recv(fd, data, len, 0);
    if (n == 0) throw TransportError("peer closed");
    if (n < 0) {
      if (errno == EINTR) continue;
      throw TransportError("recv failed");
    }
    data += n;
    len -= static_cast<std::size_t>(n);
  }
}

}  // namespace detail

class TcpTransport final : public Transport {
 public:
  explicit TcpTransport(detail::FdGuard fd) : fd_(std::move(fd)) {}

  void send(FrameType type, ByteSpan payload) override {
    Bytes frame = encode_frame(type, payload);
    detail::write_all(fd_.get(), frame.data(), frame.size());
  }

  Frame recv() override {
    std::uint8_t header[9];
    detail::read_all(fd_.get(), header, sizeof(header));
    for (std::size_t i = 0; i < 4; ++i) {
      if (header[i] != static_cast<std::uint8_t>(kMagic[i])) {
        throw TransportError("bad frame magic");
      }
    }
    Frame f;
    f.type = frame_type_from_byte(header[4]);
    const std::uint32_t len = (static_cast<std::uint32_t>(header[5]) << 24) |
                              (static_cast<std::uint32_t>(header[6]) << 16) |
                              (static_cast<std::uint32_t>(header[7]) << 8) |
                              static_cast<std::uint32_t>(header[8]);
    if (len > kMaxFramePayload) throw TransportError("frame too large");
    f.payload.resize(len);
    detail::read_all(fd_.get(), f.payload.data(), len);
    return f;
  }

  void close() override { fd_.reset(); }

 private:
  detail::FdGuard fd_;
};

class TcpListener {
 public:
  // Binds to 127.0.0.1:port; port 0 picks a free port (see port()).
  explicit TcpListener(std::uint16_t port) {
    detail::FdGuard fd(::socket(AF_INET, SOCK_STREAM, 0));
    if (fd.get() < 0) throw TransportError("socket failed");
    int yes = 1;
    ::setsockopt(fd.get(), SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(port);
    if (::bind(fd.get(), reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) !=
        0) {
      throw TransportError("bind failed");
    }
    if (::listen(fd.get(), 16) != 0) throw TransportError("listen failed");
    socklen_t len = sizeof(addr);
    if (::getsockname(fd.get(), reinterpret_cast<sockaddr*>(&addr), &len) !=
        0) {
      throw TransportError("getsockname failed");
    }
    port_ = ntohs(addr.sin_port);
    fd_ = std::move(fd);
  }

  std::uint16_t port() const { return port_; }

  std::unique_ptr<Transport> accept() {
    int cfd = ::accept(fd_.get(), nullptr, nullptr);
    if (cfd < 0) throw TransportError("accept failed");
    return std::make_unique<TcpTransport>(detail::FdGuard(cfd));
  }

  void close() { fd_.reset(); }

 private:
  detail::FdGuard fd_;
  std::uint16_t port_ = 0;
};

inline std::unique_ptr<Transport> connect_tcp(const std::string& host,
                                              std::uint16_t port) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  const std::string service = std::to_string(port);
  if (::getaddrinfo(host.c_str(), service.c_str(), &hints, &res) != 0) {
    throw TransportError("cannot resolve host: " + host);
  }
  detail::FdGuard fd;
  for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
    detail::FdGuard cand(
        ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol));
    if (cand.get() < 0) continue;
    if (::connect(cand.get(), ai->ai_addr, ai->ai_addrlen) == 0) {
      fd = std::move(cand);
      break;
    }
  }
  ::freeaddrinfo(res);
  if (fd.get() < 0) throw TransportError("connect failed");
  return std::make_unique<TcpTransport>(std::move(fd));
}

}  // namespace abka

#endif  // ABKA_TRANSPORT_HPP
