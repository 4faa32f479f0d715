#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "privsim/social_sim.hpp"

namespace privsim {

// Surrogate for the platform's closed feed-ranking algorithm. Every knob
// here is a modeling choice, not a measured constant; scenarios may
// override all of them.
struct RecommenderParams {
  double tau_profile = 336.0;  // interest decay constant, ticks (2 weeks)
  double tau_feed = 72.0;      // post recency preference inside feeds
  double watch_weight = 0.5;   // watch_video vs like weight in the profile
  double ad_click_weight = 0.25;
  double suggestion_threshold = 0.05;  // min normalized score to be suggested
  // Main feed composition. liked + suggested + sponsored + trending +
  // friends must sum to 1; sponsored items surface as suggested posts
  // carrying a sponsored flag.
  double share_liked = 0.50;
  double share_suggested = 0.10;
  double share_sponsored = 0.05;
  double share_trending = 0.15;
  double share_friend = 0.20;
  // Main video feed: attribute-related share; the rest is trending videos.
  double video_related_share = 0.30;
};

void validate_recommender_params(const RecommenderParams& params);

// Recency-weighted per-attribute interest at a given tick.
struct InterestProfile {
  std::map<AttributeId, double> scores;  // strictly positive entries only

  double score(AttributeId attr) const {
    auto it = scores.find(attr);
    return it == scores.end() ? 0.0 : it->second;
  }
  double total() const;
  // Scores scaled to sum to 1; empty when there are no interactions.
  std::map<AttributeId, double> normalized() const;
};

enum class Surface : std::uint8_t { main, latest_video, main_video };
enum class Provenance : std::uint8_t { liked_page, suggested, trending_unrelated, friend_post };

const char* to_string(Surface s);
const char* to_string(Provenance p);

struct FeedItem {
  PostId post = 0;
  Surface surface = Surface::main;
  Provenance provenance = Provenance::liked_page;
  bool sponsored = false;
};

// score(a) = sum over the user's like events for a of exp(-(age)/tau),
// with watches and ad clicks down-weighted. Events after `tick` are
// ignored so profiles can be evaluated retrospectively.
InterestProfile interest_profile(const World& world, UserId user, Tick tick,
                                 const RecommenderParams& params = {});

// Main feed sample: liked-page posts drawn per interest, suggested posts
// from non-liked pages above the suggestion threshold, sponsored filler,
// trending posts outside the profile and friend posts. Deterministic in
// (world, user, tick, n); may return fewer than n when content runs out.
std::vector<FeedItem> main_feed(const World& world, UserId user, Tick tick, std::size_t n,
                                const RecommenderParams& params = {});

// The n most recent video posts from liked pages, newest first.
std::vector<FeedItem> latest_video_feed(const World& world, UserId user, Tick tick, std::size_t n);

// Mixture of interest-related videos (any page) and trending videos.
std::vector<FeedItem> main_video_feed(const World& world, UserId user, Tick tick, std::size_t n,
                                      const RecommenderParams& params = {});

}  // namespace privsim
