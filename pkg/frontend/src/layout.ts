// Deterministic circular layout: vertex i sits at angle 2*pi*i/n starting
// from twelve o'clock.  No forces, no randomness, so snapshots are stable.

export interface Point {
  x: number;
  y: number;
}

export function circularLayout(n: number, radius = 120, cx = 160, cy = 160): Point[] {
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / Math.max(1, n) - Math.PI / 2;
    points.push({
      x: Math.round((cx + radius * Math.cos(angle)) * 100) / 100,
      y: Math.round((cy + radius * Math.sin(angle)) * 100) / 100,
    });
  }
  return points;
}
