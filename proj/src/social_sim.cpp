#include "privsim/social_sim.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "privsim/errors.hpp"

namespace privsim {

namespace {

using ordered_json = nlohmann::ordered_json;

// Filler vocabulary for post descriptions. Kept free of the bundled
// attribute keywords so fillers never trip the classifier.
const char* const kFillerTerms[] = {
    "update", "daily",  "story",   "moment", "share",  "weekend", "morning",
    "friends", "photo", "clip",    "best",   "top",    "new",     "fresh",
    "live",   "event",  "special", "inside", "closer", "favorite",
};
constexpr std::size_t kFillerCount = sizeof(kFillerTerms) / sizeof(kFillerTerms[0]);

const char* const kNamedTemplates[] = {
    "%s Club", "Daily %s", "%s Lovers", "The %s Spot", "%s World", "All About %s",
};
constexpr std::size_t kNamedTemplateCount = sizeof(kNamedTemplates) / sizeof(kNamedTemplates[0]);

const char* const kNeutralTemplates[] = {
    "Studio", "Community Hub", "The Corner", "Collective", "Signal Boost", "Open Space",
};
constexpr std::size_t kNeutralTemplateCount =
    sizeof(kNeutralTemplates) / sizeof(kNeutralTemplates[0]);

std::string format_page_name(const char* templ, const std::string& term, PageId id) {
  std::string name(templ);
  auto pos = name.find("%s");
  if (pos != std::string::npos) name.replace(pos, 2, term);
  name += " " + std::to_string(id);
  return name;
}

}  // namespace

const char* to_string(Actor a) {
  switch (a) {
    case Actor::user: return "user";
    case Actor::bot: return "bot";
  }
  return "?";
}

const char* to_string(Verb v) {
  switch (v) {
    case Verb::like_post: return "like_post";
    case Verb::like_page: return "like_page";
    case Verb::watch_video: return "watch_video";
    case Verb::click_ad: return "click_ad";
    case Verb::search: return "search";
  }
  return "?";
}

const char* to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::post: return "post";
    case ObjectKind::page: return "page";
    case ObjectKind::keyword: return "keyword";
  }
  return "?";
}

const Attribute* World::find_attribute(std::string_view keyword) const {
  for (const auto& a : attributes) {
    if (a.keyword == keyword) return &a;
  }
  return nullptr;
}

void validate_network_config(const NetworkConfig& config) {
  std::set<std::string> keywords;
  std::set<std::string> all_terms;
  for (std::size_t i = 0; i < config.attributes.size(); ++i) {
    const auto& spec = config.attributes[i];
    const std::string path = "attributes[" + std::to_string(i) + "]";
    if (spec.keyword.empty()) throw ConfigError(path + ".keyword: must be non-empty");
    if (!keywords.insert(spec.keyword).second) {
      throw ConfigError(path + ".keyword: duplicate keyword '" + spec.keyword + "'");
    }
    if (spec.pages < 0) throw ConfigError(path + ".pages: negative count");
    if (spec.popularity_min < 0 || spec.popularity_max < spec.popularity_min) {
      throw ConfigError(path + ".popularity: bad range");
    }
    if (spec.post_rate_min < 0 || spec.post_rate_max < spec.post_rate_min) {
      throw ConfigError(path + ".post_rate: bad range");
    }
    if (spec.video_share < 0 || spec.video_share > 1) {
      throw ConfigError(path + ".video_share: must be in [0,1]");
    }
    // Match-term sets must be pairwise disjoint across attributes or the
    // feed classifier becomes ambiguous.
    std::vector<std::string> terms = spec.match_terms;
    if (std::find(terms.begin(), terms.end(), spec.keyword) == terms.end()) {
      terms.push_back(spec.keyword);
    }
    for (const auto& t : terms) {
      if (t.empty()) throw ConfigError(path + ".match_terms: empty term");
      if (!all_terms.insert(t).second) {
        throw ConfigError(path + ".match_terms: term '" + t +
                          "' appears under more than one attribute");
      }
    }
  }
  if (config.description_keyword_prob < 0 || config.description_keyword_prob > 1) {
    throw ConfigError("description_keyword_prob: must be in [0,1]");
  }
  if (config.named_page_share < 0 || config.named_page_share > 1) {
    throw ConfigError("named_page_share: must be in [0,1]");
  }
}

World create_network(const NetworkConfig& config, std::uint64_t seed) {
  validate_network_config(config);
  World world;
  world.rng_seed = seed;
  world.publish_rng = Pcg32(seed, /*stream=*/0x9ab1u);

  Pcg32 gen(seed, /*stream=*/0x51feu);
  for (const auto& spec : config.attributes) {
    Attribute attr;
    attr.id = static_cast<AttributeId>(world.attributes.size());
    attr.keyword = spec.keyword;
    attr.match_terms = spec.match_terms;
    if (std::find(attr.match_terms.begin(), attr.match_terms.end(), attr.keyword) ==
        attr.match_terms.end()) {
      attr.match_terms.push_back(attr.keyword);
    }
    world.attributes.push_back(attr);

    for (int i = 0; i < spec.pages; ++i) {
      Page page;
      page.id = static_cast<PageId>(world.pages.size());
      page.attribute = attr.id;
      page.popularity = gen.uniform_real(spec.popularity_min, spec.popularity_max);
      page.post_rate = gen.uniform_real(spec.post_rate_min, spec.post_rate_max);
      page.video_share = spec.video_share;
      if (gen.next_double() < config.named_page_share) {
        const auto& term =
            attr.match_terms[gen.uniform_u32(static_cast<std::uint32_t>(attr.match_terms.size()))];
        page.name = format_page_name(
            kNamedTemplates[gen.uniform_u32(kNamedTemplateCount)], term, page.id);
      } else {
        page.name = std::string(kNeutralTemplates[gen.uniform_u32(kNeutralTemplateCount)]) + " " +
                    std::to_string(page.id);
      }
      world.pages.push_back(page);
      world.page_posts.emplace_back();
    }
  }
  // Stash the description settings for publish_tick. Kept on the world so
  // replays see the same content stream.
  world.desc_keyword_prob = config.description_keyword_prob;
  return world;
}

UserId add_user(World& world, const std::set<AttributeId>& real_attrs,
                const std::set<AttributeId>& noise_attrs, int friend_count) {
  for (AttributeId a : real_attrs) {
    if (a >= world.attributes.size()) throw ValidationError("add_user: unknown real attribute");
    if (noise_attrs.count(a)) {
      throw ValidationError("add_user: attribute '" + world.attributes[a].keyword +
                            "' is both real and noise");
    }
  }
  for (AttributeId a : noise_attrs) {
    if (a >= world.attributes.size()) throw ValidationError("add_user: unknown noise attribute");
  }
  if (friend_count < 0) throw ValidationError("add_user: negative friend count");

  User user;
  user.id = static_cast<UserId>(world.users.size());
  user.real_attrs = real_attrs;
  user.noise_attrs = noise_attrs;
  world.users.push_back(user);
  UserId id = user.id;

  for (int i = 0; i < friend_count; ++i) {
    User peer;
    peer.id = static_cast<UserId>(world.users.size());
    peer.friends.insert(id);
    world.users.push_back(peer);
    world.users[id].friends.insert(peer.id);
  }
  return id;
}

std::vector<PostId> publish_tick(World& world) {
  std::vector<PostId> fresh;
  for (const auto& page : world.pages) {
    int count = world.publish_rng.poisson(page.post_rate);
    for (int i = 0; i < count; ++i) {
      Post post;
      post.id = static_cast<PostId>(world.posts.size());
      post.page = page.id;
      post.created = world.tick;
      post.kind = world.publish_rng.next_double() < page.video_share ? PostKind::video
                                                                     : PostKind::text;
      const auto& attr = world.attributes[page.attribute];
      if (world.publish_rng.next_double() < world.desc_keyword_prob) {
        post.description_terms.push_back(
            attr.match_terms[world.publish_rng.uniform_u32(
                static_cast<std::uint32_t>(attr.match_terms.size()))]);
      }
      int fillers = static_cast<int>(world.publish_rng.uniform_int(2, 4));
      for (int f = 0; f < fillers; ++f) {
        post.description_terms.push_back(
            kFillerTerms[world.publish_rng.uniform_u32(kFillerCount)]);
      }
      world.posts.push_back(std::move(post));
      world.page_posts[page.id].push_back(world.posts.back().id);
      fresh.push_back(world.posts.back().id);
    }
  }
  world.tick += 1;
  return fresh;
}

namespace {

bool attribute_matches(const Attribute& attr, std::string_view query) {
  if (attr.keyword == query) return true;
  for (const auto& t : attr.match_terms) {
    if (t == query) return true;
  }
  return false;
}

}  // namespace

std::vector<PageId> search_pages(const World& world, std::string_view keyword, std::size_t limit) {
  if (limit < 1) throw ValidationError("search_pages: limit must be >= 1");
  std::vector<PageId> hits;
  for (const auto& page : world.pages) {
    if (attribute_matches(world.attributes[page.attribute], keyword)) hits.push_back(page.id);
  }
  std::sort(hits.begin(), hits.end(), [&](PageId a, PageId b) {
    const auto& pa = world.pages[a];
    const auto& pb = world.pages[b];
    if (pa.popularity != pb.popularity) return pa.popularity > pb.popularity;
    return a < b;
  });
  if (hits.size() > limit) hits.resize(limit);
  return hits;
}

std::vector<PostId> search_videos(const World& world, std::string_view keyword, std::size_t limit) {
  if (limit < 1) throw ValidationError("search_videos: limit must be >= 1");
  std::vector<PostId> hits;
  for (const auto& post : world.posts) {
    if (post.kind != PostKind::video) continue;
    if (attribute_matches(world.attributes[world.pages[post.page].attribute], keyword)) {
      hits.push_back(post.id);
    }
  }
  std::sort(hits.begin(), hits.end(), [&](PostId a, PostId b) {
    const auto& pa = world.posts[a];
    const auto& pb = world.posts[b];
    if (pa.created != pb.created) return pa.created > pb.created;
    return a > b;
  });
  if (hits.size() > limit) hits.resize(limit);
  return hits;
}

void record_interaction(World& world, const InteractionEvent& event) {
  if (event.tick != world.tick) {
    throw ValidationError("record_interaction: event tick " + std::to_string(event.tick) +
                          " != world tick " + std::to_string(world.tick));
  }
  if (!world.has_user(event.subject)) throw ValidationError("record_interaction: unknown user");
  if (event.attribute != kUnrelated && event.attribute >= world.attributes.size()) {
    throw ValidationError("record_interaction: unknown attribute");
  }

  User& user = world.users[event.subject];
  switch (event.verb) {
    case Verb::like_post: {
      if (event.object_kind != ObjectKind::post || !world.has_post(event.object_id)) {
        throw ValidationError("record_interaction: like_post needs an existing post");
      }
      if (!user.liked_posts.insert(event.object_id).second) {
        throw DuplicateInteractionError("post " + std::to_string(event.object_id) +
                                        " already liked by user " +
                                        std::to_string(event.subject));
      }
      break;
    }
    case Verb::like_page: {
      if (event.object_kind != ObjectKind::page || !world.has_page(event.object_id)) {
        throw ValidationError("record_interaction: like_page needs an existing page");
      }
      if (!user.liked_pages.insert(event.object_id).second) {
        throw DuplicateInteractionError("page " + std::to_string(event.object_id) +
                                        " already liked by user " +
                                        std::to_string(event.subject));
      }
      break;
    }
    case Verb::watch_video: {
      if (event.object_kind != ObjectKind::post || !world.has_post(event.object_id)) {
        throw ValidationError("record_interaction: watch_video needs an existing post");
      }
      if (world.posts[event.object_id].kind != PostKind::video) {
        throw ValidationError("record_interaction: watch_video on a non-video post");
      }
      break;
    }
    case Verb::click_ad: {
      if (event.object_kind != ObjectKind::post || !world.has_post(event.object_id)) {
        throw ValidationError("record_interaction: click_ad needs an existing post");
      }
      break;
    }
    case Verb::search: {
      if (event.object_kind != ObjectKind::keyword || event.object_key.empty()) {
        throw ValidationError("record_interaction: search needs a keyword object");
      }
      break;
    }
  }
  world.log.push_back(event);
}

std::string event_to_ndjson(const World& world, const InteractionEvent& event) {
  ordered_json j;
  j["tick"] = event.tick;
  j["actor"] = to_string(event.actor);
  j["subject"] = event.subject;
  j["verb"] = to_string(event.verb);
  j["object_kind"] = to_string(event.object_kind);
  if (event.object_kind == ObjectKind::keyword) {
    j["object"] = event.object_key;
  } else {
    j["object"] = event.object_id;
  }
  j["attribute"] =
      event.attribute == kUnrelated ? "unrelated" : world.attributes[event.attribute].keyword;
  return j.dump();
}

InteractionEvent event_from_ndjson(const World& world, const std::string& line, int line_no) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad event JSON: ") + e.what(), line_no);
  }
  InteractionEvent event;
  try {
    event.tick = j.at("tick").get<Tick>();
    std::string actor = j.at("actor").get<std::string>();
    if (actor == "user") {
      event.actor = Actor::user;
    } else if (actor == "bot") {
      event.actor = Actor::bot;
    } else {
      throw ParseError("unknown actor '" + actor + "'", line_no);
    }
    event.subject = j.at("subject").get<UserId>();
    std::string verb = j.at("verb").get<std::string>();
    if (verb == "like_post") event.verb = Verb::like_post;
    else if (verb == "like_page") event.verb = Verb::like_page;
    else if (verb == "watch_video") event.verb = Verb::watch_video;
    else if (verb == "click_ad") event.verb = Verb::click_ad;
    else if (verb == "search") event.verb = Verb::search;
    else throw ParseError("unknown verb '" + verb + "'", line_no);
    std::string kind = j.at("object_kind").get<std::string>();
    if (kind == "post") event.object_kind = ObjectKind::post;
    else if (kind == "page") event.object_kind = ObjectKind::page;
    else if (kind == "keyword") event.object_kind = ObjectKind::keyword;
    else throw ParseError("unknown object_kind '" + kind + "'", line_no);
    if (event.object_kind == ObjectKind::keyword) {
      event.object_key = j.at("object").get<std::string>();
    } else {
      event.object_id = j.at("object").get<std::uint32_t>();
    }
    std::string attr = j.at("attribute").get<std::string>();
    if (attr == "unrelated") {
      event.attribute = kUnrelated;
    } else {
      const Attribute* a = world.find_attribute(attr);
      if (a == nullptr) throw ParseError("unknown attribute '" + attr + "'", line_no);
      event.attribute = a->id;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad event field: ") + e.what(), line_no);
  }
  return event;
}

std::string world_fingerprint(const World& world) {
  ordered_json j;
  j["tick"] = world.tick;
  j["seed"] = world.rng_seed;
  auto& attrs = j["attributes"] = ordered_json::array();
  for (const auto& a : world.attributes) {
    attrs.push_back({{"id", a.id}, {"keyword", a.keyword}, {"match_terms", a.match_terms}});
  }
  auto& pages = j["pages"] = ordered_json::array();
  for (const auto& p : world.pages) {
    pages.push_back({{"id", p.id},
                     {"name", p.name},
                     {"attribute", p.attribute},
                     {"popularity", p.popularity},
                     {"post_rate", p.post_rate},
                     {"video_share", p.video_share}});
  }
  auto& posts = j["posts"] = ordered_json::array();
  for (const auto& p : world.posts) {
    posts.push_back({{"id", p.id},
                     {"page", p.page},
                     {"kind", p.kind == PostKind::video ? "video" : "text"},
                     {"created", p.created},
                     {"terms", p.description_terms}});
  }
  auto& log = j["log"] = ordered_json::array();
  for (const auto& e : world.log) log.push_back(event_to_ndjson(world, e));
  return j.dump();
}

}  // namespace privsim
