#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "privsim/rng.hpp"

namespace privsim {

using Tick = std::int64_t;
using PageId = std::uint32_t;
using PostId = std::uint32_t;
using UserId = std::uint32_t;
using AttributeId = std::uint32_t;

constexpr Tick kTicksPerWeek = 168;  // 1 tick = 1 simulated hour

// Sentinel for "no attribute" / content unrelated to any known interest.
constexpr AttributeId kUnrelated = 0xffffffffu;

// A keyword-labeled interest. match_terms drive feed classification and
// always include the canonical keyword itself.
struct Attribute {
  AttributeId id = 0;
  std::string keyword;
  std::vector<std::string> match_terms;
};

enum class PostKind : std::uint8_t { text, video };

struct Page {
  PageId id = 0;
  std::string name;
  AttributeId attribute = 0;  // exactly one attribute per page
  double popularity = 1.0;    // >= 0, search ranking and sampling weight
  double post_rate = 0.0;     // expected posts per tick
  double video_share = 0.0;   // fraction of posts that are videos, in [0,1]
};

struct Post {
  PostId id = 0;
  PageId page = 0;
  PostKind kind = PostKind::text;
  Tick created = 0;
  std::vector<std::string> description_terms;
};

struct User {
  UserId id = 0;
  std::set<UserId> friends;
  std::set<PageId> liked_pages;
  std::set<AttributeId> real_attrs;
  std::set<AttributeId> noise_attrs;
  std::set<PostId> liked_posts;  // duplicate-like rejection
};

enum class Actor : std::uint8_t { user, bot };
enum class Verb : std::uint8_t { like_post, like_page, watch_video, click_ad, search };
enum class ObjectKind : std::uint8_t { post, page, keyword };

struct InteractionEvent {
  Tick tick = 0;
  Actor actor = Actor::user;
  UserId subject = 0;
  Verb verb = Verb::like_post;
  ObjectKind object_kind = ObjectKind::post;
  std::uint32_t object_id = 0;  // post or page id
  std::string object_key;       // keyword, for search events
  AttributeId attribute = kUnrelated;
};

const char* to_string(Actor a);
const char* to_string(Verb v);
const char* to_string(ObjectKind k);

// Per-attribute content settings for network generation.
struct AttributeSpec {
  std::string keyword;
  std::vector<std::string> match_terms;  // keyword is added if missing
  int pages = 0;
  double popularity_min = 1.0;
  double popularity_max = 100.0;
  double post_rate_min = 0.02;
  double post_rate_max = 0.08;
  double video_share = 0.3;
};

struct NetworkConfig {
  std::vector<AttributeSpec> attributes;
  // Probability that a post's description carries one of its page's match
  // terms; below 1.0 the keyword classifier is deliberately imperfect.
  double description_keyword_prob = 0.9;
  // Share of pages whose display name contains a match term (the rest get
  // neutral names and classify only through post descriptions).
  double named_page_share = 0.7;
};

// The whole simulated network. Single writer; read-only queries may run
// concurrently against a non-mutating snapshot.
struct World {
  Tick tick = 0;
  std::uint64_t rng_seed = 0;
  std::vector<Attribute> attributes;
  std::vector<Page> pages;
  std::vector<Post> posts;  // append-only, id == index
  std::vector<User> users;
  std::vector<InteractionEvent> log;  // append-only, ticks non-decreasing
  std::vector<std::vector<PostId>> page_posts;  // per page, creation order
  Pcg32 publish_rng;  // content stream; consumed only by publish_tick
  double desc_keyword_prob = 0.9;

  const Attribute* find_attribute(std::string_view keyword) const;
  bool has_page(PageId id) const { return id < pages.size(); }
  bool has_post(PostId id) const { return id < posts.size(); }
  bool has_user(UserId id) const { return id < users.size(); }
};

// Builds pages (and no users) from the config. Identical (config, seed)
// pairs produce identical worlds; see world_fingerprint.
World create_network(const NetworkConfig& config, std::uint64_t seed);

// Adds a user plus `friend_count` bare friend users. Returns the new id.
UserId add_user(World& world, const std::set<AttributeId>& real_attrs,
                const std::set<AttributeId>& noise_attrs, int friend_count = 0);

// Every page emits Poisson(post_rate) posts stamped with the current tick,
// then the clock advances by one. Returns the new post ids.
std::vector<PostId> publish_tick(World& world);

// Pages whose attribute matches the query (keyword or any match term,
// exact string), ordered by popularity desc then id asc, at most `limit`.
std::vector<PageId> search_pages(const World& world, std::string_view keyword, std::size_t limit);

// Video posts from pages whose attribute matches the query, newest first
// (created desc, id desc), at most `limit`.
std::vector<PostId> search_videos(const World& world, std::string_view keyword, std::size_t limit);

// Validates and appends an event; updates liked page/post sets. Re-likes
// throw DuplicateInteractionError rather than being ignored.
void record_interaction(World& world, const InteractionEvent& event);

// One NDJSON line per event, fields in fixed order, byte-stable.
std::string event_to_ndjson(const World& world, const InteractionEvent& event);
InteractionEvent event_from_ndjson(const World& world, const std::string& line, int line_no);

// Deterministic structural serialization (pages, posts, log); two worlds
// built from the same inputs compare byte-identical.
std::string world_fingerprint(const World& world);

void validate_network_config(const NetworkConfig& config);

}  // namespace privsim
