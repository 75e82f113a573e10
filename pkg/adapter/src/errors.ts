export class AdapterError extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'AdapterError';
  }
}

export class DimensionMismatch extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'DimensionMismatch';
  }
}
