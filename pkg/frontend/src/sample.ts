// A real response from the clustering service, bundled so the explorer has
// something to show without a running backend.

import { ClusterJobResponse } from "./types";

export function sampleResponse(): ClusterJobResponse {
  return SAMPLE as unknown as ClusterJobResponse;
}

const SAMPLE = {
  "clusters": [
    {
      "id": 0,
      "members": [
        "snd-00",
        "snd-01",
        "snd-02",
        "snd-03",
        "snd-04"
      ],
      "confidence": 0.7692307692307693,
      "labels": [
        "door",
        "click",
        "creak"
      ],
      "pruned": false
    },
    {
      "id": 1,
      "members": [
        "snd-05",
        "snd-06",
        "snd-07",
        "snd-08",
        "snd-12",
        "snd-13",
        "snd-14"
      ],
      "confidence": 0.6363636363636364,
      "labels": [
        "footsteps",
        "rain",
        "storm"
      ],
      "pruned": false
    },
    {
      "id": 2,
      "members": [
        "snd-09",
        "snd-10",
        "snd-11",
        "snd-15"
      ],
      "confidence": 0.46153846153846156,
      "labels": [
        "glass",
        "bottle",
        "break"
      ],
      "pruned": false
    }
  ],
  "unclustered": [],
  "modularity": 0.40992767915844835,
  "seed": 0,
  "graph": {
    "nodes": [
      {
        "id": "snd-00",
        "index": 0,
        "name": "door creak",
        "tags": [
          "door",
          "creak"
        ],
        "preview_url": "https://example.org/previews/0.mp3",
        "cluster": 0
      },
      {
        "id": "snd-01",
        "index": 1,
        "name": "door slam",
        "tags": [
          "door",
          "slam"
        ],
        "preview_url": "https://example.org/previews/1.mp3",
        "cluster": 0
      },
      {
        "id": "snd-02",
        "index": 2,
        "name": "hinge squeak",
        "tags": [
          "door",
          "squeak"
        ],
        "preview_url": "https://example.org/previews/2.mp3",
        "cluster": 0
      },
      {
        "id": "snd-03",
        "index": 3,
        "name": "wood knock",
        "tags": [
          "wood",
          "knock"
        ],
        "preview_url": "https://example.org/previews/3.mp3",
        "cluster": 0
      },
      {
        "id": "snd-04",
        "index": 4,
        "name": "latch click",
        "tags": [
          "door",
          "click"
        ],
        "preview_url": "https://example.org/previews/4.mp3",
        "cluster": 0
      },
      {
        "id": "snd-05",
        "index": 5,
        "name": "rain on roof",
        "tags": [
          "rain",
          "roof"
        ],
        "preview_url": "https://example.org/previews/5.mp3",
        "cluster": 1
      },
      {
        "id": "snd-06",
        "index": 6,
        "name": "rain soft",
        "tags": [
          "rain",
          "soft"
        ],
        "preview_url": "https://example.org/previews/6.mp3",
        "cluster": 1
      },
      {
        "id": "snd-07",
        "index": 7,
        "name": "thunder far",
        "tags": [
          "thunder",
          "storm"
        ],
        "preview_url": "https://example.org/previews/7.mp3",
        "cluster": 1
      },
      {
        "id": "snd-08",
        "index": 8,
        "name": "storm wind",
        "tags": [
          "storm",
          "wind"
        ],
        "preview_url": "https://example.org/previews/8.mp3",
        "cluster": 1
      },
      {
        "id": "snd-09",
        "index": 9,
        "name": "glass clink",
        "tags": [
          "glass",
          "clink"
        ],
        "preview_url": "https://example.org/previews/9.mp3",
        "cluster": 2
      },
      {
        "id": "snd-10",
        "index": 10,
        "name": "bottle open",
        "tags": [
          "glass",
          "bottle"
        ],
        "preview_url": "https://example.org/previews/10.mp3",
        "cluster": 2
      },
      {
        "id": "snd-11",
        "index": 11,
        "name": "glass break",
        "tags": [
          "glass",
          "break"
        ],
        "preview_url": "https://example.org/previews/11.mp3",
        "cluster": 2
      },
      {
        "id": "snd-12",
        "index": 12,
        "name": "footsteps gravel",
        "tags": [
          "footsteps",
          "gravel"
        ],
        "preview_url": "https://example.org/previews/12.mp3",
        "cluster": 1
      },
      {
        "id": "snd-13",
        "index": 13,
        "name": "footsteps wood",
        "tags": [
          "footsteps",
          "wood"
        ],
        "preview_url": "https://example.org/previews/13.mp3",
        "cluster": 1
      },
      {
        "id": "snd-14",
        "index": 14,
        "name": "boots mud",
        "tags": [
          "footsteps",
          "mud"
        ],
        "preview_url": "https://example.org/previews/14.mp3",
        "cluster": 1
      },
      {
        "id": "snd-15",
        "index": 15,
        "name": "crowd murmur",
        "tags": [
          "crowd",
          "people"
        ],
        "preview_url": "https://example.org/previews/15.mp3",
        "cluster": 2
      }
    ],
    "edges": [
      [
        0,
        1
      ],
      [
        0,
        2
      ],
      [
        0,
        3
      ],
      [
        0,
        4
      ],
      [
        0,
        12
      ],
      [
        0,
        13
      ],
      [
        0,
        15
      ],
      [
        1,
        2
      ],
      [
        1,
        3
      ],
      [
        1,
        4
      ],
      [
        2,
        3
      ],
      [
        2,
        4
      ],
      [
        3,
        4
      ],
      [
        5,
        6
      ],
      [
        5,
        7
      ],
      [
        5,
        8
      ],
      [
        5,
        12
      ],
      [
        5,
        14
      ],
      [
        6,
        7
      ],
      [
        6,
        8
      ],
      [
        6,
        12
      ],
      [
        7,
        8
      ],
      [
        7,
        12
      ],
      [
        8,
        12
      ],
      [
        9,
        10
      ],
      [
        9,
        11
      ],
      [
        9,
        12
      ],
      [
        9,
        15
      ],
      [
        10,
        11
      ],
      [
        10,
        12
      ],
      [
        10,
        15
      ],
      [
        11,
        12
      ],
      [
        11,
        15
      ],
      [
        12,
        13
      ],
      [
        12,
        14
      ],
      [
        12,
        15
      ],
      [
        13,
        14
      ],
      [
        13,
        15
      ],
      [
        14,
        15
      ]
    ],
    "k": 4
  }
};
