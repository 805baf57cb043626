// Ternary-diagram geometry: barycentric layout of integer compositions
// and scene construction for the SVG view. Pure data in, pure data out;
// every displayed number is carried through from server responses.

import type { FpsPoint, WindowMember } from "./api.js";

const SQRT3_2 = Math.sqrt(3) / 2;

export interface TernaryDot {
  x: number;
  y: number;
  composition: [number, number, number];
  tooltip: string;
  rankLabel: string | null;
}

export interface TernaryScene {
  outline: [number, number][];
  dots: TernaryDot[];
}

// Corners: component 1 at the origin, component 2 right, component 3 top.
// Component 1's weight is implied by the other two on the simplex.
export function toXY(_x1: number, x2: number, x3: number): [number, number] {
  const b = x2 / 100;
  const c = x3 / 100;
  return [b + 0.5 * c, SQRT3_2 * c];
}

export function buildTernaryScene(
  points: FpsPoint[],
  windowMembers: WindowMember[] = [],
): TernaryScene {
  const ranked = new Map<string, WindowMember>();
  for (const member of windowMembers) {
    ranked.set(member.composition.join(","), member);
  }
  const dots = points.map((p) => {
    const member = ranked.get([p.x1, p.x2, p.x3].join(","));
    const tooltip = member
      ? `(${p.x1},${p.x2},${p.x3}) y1=${p.y1.toFixed(2)} y2=${p.y2.toFixed(2)} ` +
        `D=${member.desirability.toFixed(4)}`
      : `(${p.x1},${p.x2},${p.x3}) y1=${p.y1.toFixed(2)} y2=${p.y2.toFixed(2)}`;
    const [x, y] = toXY(p.x1, p.x2, p.x3);
    return {
      x,
      y,
      composition: [p.x1, p.x2, p.x3] as [number, number, number],
      tooltip,
      rankLabel: member && member.rank <= 3 ? member.label : null,
    };
  });
  return {
    outline: [
      [0, 0],
      [1, 0],
      [0.5, SQRT3_2],
    ],
    dots,
  };
}
