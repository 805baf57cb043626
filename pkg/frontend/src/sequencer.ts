// Monotonically increasing request versions; responses carrying an older
// version than the current one are stale and must be discarded.

export type RequestSequencer = {
  next: () => number;
  isStale: (version: number) => boolean;
  current: () => number;
};

export function createRequestSequencer(): RequestSequencer {
  let version = 0;

  return {
    next() {
      version += 1;
      return version;
    },
    isStale(requestVersion: number) {
      return requestVersion !== version;
    },
    current() {
      return version;
    },
  };
}
